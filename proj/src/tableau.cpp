#include "exou/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace exou {

StandardTableau::StandardTableau(Partition shape,
                                 std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    int n = shape_.size();
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw Inconsistent("tableau row count does not match shape");
    row_word_.assign(n, 0);
    col_word_.assign(n, 0);
    std::vector<bool> seen(n + 1, false);
    for (int r = 1; r <= shape_.rows(); ++r) {
        if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r))
            throw Inconsistent("tableau row length does not match shape");
        for (int c = 1; c <= shape_.part(r); ++c) {
            int k = rows_[r - 1][c - 1];
            if (k < 1 || k > n || seen[k])
                throw Inconsistent("tableau entries must be 1..n exactly once");
            seen[k] = true;
            row_word_[k - 1] = r;
            col_word_[k - 1] = c;
            if (c > 1 && rows_[r - 1][c - 2] >= k)
                throw Inconsistent("rows must increase");
            if (r > 1 && rows_[r - 2][c - 1] >= k)
                throw Inconsistent("columns must increase");
        }
    }
}

StandardTableau StandardTableau::from_positions(Partition shape,
                                                std::vector<int> row_of,
                                                std::vector<int> col_of) {
    std::vector<std::vector<int>> rows(shape.rows());
    for (int r = 1; r <= shape.rows(); ++r)
        rows[r - 1].assign(shape.part(r), 0);
    for (size_t k = 0; k < row_of.size(); ++k) {
        int r = row_of[k], c = col_of[k];
        if (!shape.has_cell(r, c) || rows[r - 1][c - 1] != 0)
            throw Inconsistent("positions do not tile the shape");
        rows[r - 1][c - 1] = static_cast<int>(k + 1);
    }
    return StandardTableau(std::move(shape), std::move(rows));
}

int StandardTableau::row_of(int k) const {
    if (k < 1 || k > size()) throw IndexOutOfRange("entry out of range");
    return row_word_[k - 1];
}

int StandardTableau::col_of(int k) const {
    if (k < 1 || k > size()) throw IndexOutOfRange("entry out of range");
    return col_word_[k - 1];
}

bool StandardTableau::adjacent_in_line(int i) const {
    return row_of(i) == row_of(i + 1) || col_of(i) == col_of(i + 1);
}

StandardTableau StandardTableau::swapped(int i) const {
    if (i < 1 || i + 1 > size()) throw IndexOutOfRange("entry out of range");
    auto rows = rows_;
    rows[row_of(i) - 1][col_of(i) - 1] = i + 1;
    rows[row_of(i + 1) - 1][col_of(i + 1) - 1] = i;
    return StandardTableau(shape_, std::move(rows));
}

StandardTableau StandardTableau::transposed() const {
    return from_positions(shape_.conjugate(), col_word_, row_word_);
}

int StandardTableau::alternating_sign() const {
    int inversions = 0;
    int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (row_word_[i] > row_word_[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

ContentVector content_vector(const StandardTableau& t) {
    ContentVector cv(t.size());
    for (int k = 1; k <= t.size(); ++k) cv[k - 1] = t.content(k);
    return cv;
}

int axial_distance(const StandardTableau& t, int i, int j) {
    return t.content(j) - t.content(i);
}

namespace {

// Places n, n-1, ... at removable corners of the shrinking shape.
void enumerate_rec(std::vector<int>& shape, int k, std::vector<int>& row_of,
                   std::vector<int>& col_of,
                   std::vector<StandardTableau>& out, const Partition& full) {
    if (k == 0) {
        out.push_back(
            StandardTableau::from_positions(full, row_of, col_of));
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] == 0) continue;
        bool removable =
            (r + 1 == shape.size()) || shape[r + 1] < shape[r];
        if (!removable) continue;
        row_of[k - 1] = static_cast<int>(r + 1);
        col_of[k - 1] = shape[r];
        --shape[r];
        enumerate_rec(shape, k - 1, row_of, col_of, out, full);
        ++shape[r];
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_standard(const Partition& shape,
                                                int cell_cap) {
    if (shape.size() > cell_cap)
        throw SizeLimit("shape " + shape.to_string() + " exceeds the " +
                        std::to_string(cell_cap) + "-cell enumeration cap");
    if (shape.empty()) return {};
    std::vector<int> cells = shape.parts();
    std::vector<int> row_of(shape.size()), col_of(shape.size());
    std::vector<StandardTableau> out;
    enumerate_rec(cells, shape.size(), row_of, col_of, out, shape);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) {
                  return a.row_word() > b.row_word();
              });
    return out;
}

std::uint64_t dimension(const Partition& shape) {
    int n = shape.size();
    if (n == 0) return 1;
    if (n > 33)
        throw SizeLimit("dimension supports at most 33 cells exactly");
    __int128 numerator = 1;
    for (int k = 2; k <= n; ++k) numerator *= k;
    Partition conj = shape.conjugate();
    __int128 hooks = 1;
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = 1; c <= shape.part(r); ++c) {
            int arm = shape.part(r) - c;
            int leg = conj.part(c) - r;
            hooks *= arm + leg + 1;
        }
    }
    return static_cast<std::uint64_t>(numerator / hooks);
}

namespace {

// Counts Gelfand-Tsetlin continuations: rows of length d, d-1, ..., 1,
// each interleaving the one above.
std::uint64_t gt_count(const std::vector<int>& row,
                       std::map<std::vector<int>, std::uint64_t>& memo) {
    if (row.size() <= 1) return 1;
    auto it = memo.find(row);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    std::vector<int> next(row.size() - 1);
    // next[i] ranges over [row[i+1], row[i]].
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == next.size()) {
            total += gt_count(next, memo);
            return;
        }
        for (int v = row[i + 1]; v <= row[i]; ++v) {
            next[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    memo[row] = total;
    return total;
}

}  // namespace

std::uint64_t weyl_dimension(const Partition& shape, int d) {
    if (d <= 0) return shape.empty() ? 1 : 0;
    if (shape.rows() > d) return 0;
    std::vector<int> top(d);
    for (int i = 1; i <= d; ++i) top[i - 1] = shape.part(i);
    std::map<std::vector<int>, std::uint64_t> memo;
    return gt_count(top, memo);
}

int canonical_index(const std::vector<StandardTableau>& basis,
                    const StandardTableau& t) {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == t) return static_cast<int>(i);
    throw Inconsistent("tableau not in basis");
}

StandardTableau tableau_from_content_vector(const ContentVector& cv) {
    int n = static_cast<int>(cv.size());
    if (n == 0) throw Inconsistent("empty content vector");
    // Diagonal j holds the indices k with cv[k-1] = j, in ascending order.
    std::map<int, std::vector<int>> diagonals;
    for (int k = 1; k <= n; ++k) diagonals[cv[k - 1]].push_back(k);

    std::vector<int> row_of(n), col_of(n);
    int max_row = 0;
    for (const auto& [j, entries] : diagonals) {
        for (size_t i = 0; i < entries.size(); ++i) {
            int r = static_cast<int>(i + 1) + (j < 0 ? -j : 0);
            int c = static_cast<int>(i + 1) + (j > 0 ? j : 0);
            row_of[entries[i] - 1] = r;
            col_of[entries[i] - 1] = c;
            max_row = std::max(max_row, r);
        }
    }
    std::vector<int> lengths(max_row, 0);
    for (int k = 0; k < n; ++k)
        lengths[row_of[k] - 1] = std::max(lengths[row_of[k] - 1], col_of[k]);
    int cells = std::accumulate(lengths.begin(), lengths.end(), 0);
    if (cells != n)
        throw Inconsistent("content vector does not tile a diagram");
    Partition shape;
    try {
        shape = Partition(lengths);
    } catch (const Error&) {
        throw Inconsistent("content vector rows are not weakly decreasing");
    }
    try {
        return StandardTableau::from_positions(std::move(shape),
                                               std::move(row_of),
                                               std::move(col_of));
    } catch (const Error&) {
        throw Inconsistent("content vector does not define a standard tableau");
    }
}

}  // namespace exou
