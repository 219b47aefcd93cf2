#include "exou/lr.hpp"

#include <algorithm>

namespace exou {

namespace {

struct SkewCell {
    int row;
    int col;
};

// Backtracking count over the cells of nu\lambda in reverse reading order
// (each row right to left, rows top to bottom), so the lattice-word prefix
// condition can be checked as cells are placed.
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& nu, const Partition& mu)
        : lambda_(lambda), nu_(nu), mu_(mu) {
        for (int r = 1; r <= nu.rows(); ++r)
            for (int c = nu.part(r); c > lambda.part(r); --c)
                cells_.push_back({r, c});
        grid_.assign(nu.rows() + 1, std::vector<int>(nu.cols() + 2, 0));
        counts_.assign(mu.rows() + 1, 0);
    }

    std::uint64_t count() {
        total_ = 0;
        place(0);
        return total_;
    }

private:
    void place(size_t idx) {
        if (idx == cells_.size()) {
            ++total_;
            return;
        }
        const SkewCell cell = cells_[idx];
        int lo = 1, hi = mu_.rows();
        // Right neighbour (same row) was filled earlier: weakly increasing.
        if (cell.col + 1 <= nu_.part(cell.row))
            hi = std::min(hi, grid_[cell.row][cell.col + 1]);
        // Skew cell above was filled earlier: strictly increasing columns.
        if (cell.row > 1 && cell.col > lambda_.part(cell.row - 1))
            lo = std::max(lo, grid_[cell.row - 1][cell.col] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (counts_[v] >= mu_.part(v)) continue;
            if (v > 1 && counts_[v] >= counts_[v - 1]) continue;  // lattice
            ++counts_[v];
            grid_[cell.row][cell.col] = v;
            place(idx + 1);
            grid_[cell.row][cell.col] = 0;
            --counts_[v];
        }
    }

    const Partition& lambda_;
    const Partition& nu_;
    const Partition& mu_;
    std::vector<SkewCell> cells_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> counts_;
    std::uint64_t total_ = 0;
};

// Candidate outer shapes for lambda x mu: weakly decreasing rows with
// max(lambda_i, mu_i) <= nu_i <= min(lambda_i + mu_1, mu_i + lambda_1).
void candidates_rec(const Partition& lambda, const Partition& mu, int row,
                    int remaining, int prev, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        if (row > lambda.rows() && row > mu.rows()) out.emplace_back(acc);
        return;
    }
    int lo = std::max({lambda.part(row), mu.part(row), 1});
    int hi = std::min({prev, remaining, lambda.part(row) + mu.part(1),
                       mu.part(row) + lambda.part(1)});
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        candidates_rec(lambda, mu, row + 1, remaining - v, v, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    if (mu.empty()) return 1;
    LrCounter counter(lambda, nu, mu);
    return counter.count();
}

LrExpansion lr_expand(const Partition& lambda, const Partition& mu,
                      int total_cap) {
    int n = lambda.size() + mu.size();
    if (n > total_cap)
        throw SizeLimit("product of " + std::to_string(n) +
                        " cells exceeds the cap of " +
                        std::to_string(total_cap));
    LrExpansion out;
    if (mu.empty()) {
        out[lambda] = 1;
        return out;
    }
    if (lambda.empty()) {
        out[mu] = 1;
        return out;
    }
    std::vector<Partition> candidates;
    std::vector<int> acc;
    candidates_rec(lambda, mu, 1, n, n, acc, candidates);
    for (const Partition& nu : candidates) {
        std::uint64_t c = lr_coefficient(lambda, mu, nu);
        if (c > 0) out[nu] = c;
    }
    return out;
}

std::uint64_t multi_lr_coefficient(const std::vector<Partition>& members,
                                   const Partition& nu) {
    int total = 0;
    for (const Partition& m : members) total += m.size();
    if (total != nu.size()) return 0;
    if (members.empty()) return nu.empty() ? 1 : 0;

    // Forward distribution over intermediate labels, pruned to labels
    // contained in nu (supports only grow row-wise along the iteration).
    LrExpansion dist;
    dist[members[0]] = nu.contains(members[0]) ? 1 : 0;
    for (size_t i = 1; i < members.size(); ++i) {
        LrExpansion next;
        for (const auto& [kappa, mult] : dist) {
            if (mult == 0) continue;
            LrExpansion step = lr_expand(kappa, members[i], nu.size());
            for (const auto& [tau, c] : step) {
                if (!nu.contains(tau)) continue;
                next[tau] += mult * c;
            }
        }
        dist.swap(next);
    }
    auto it = dist.find(nu);
    return it == dist.end() ? 0 : it->second;
}

LRProductSet product_set(const PartitionFamily& family, int total_cap,
                         bool prune_intermediates) {
    if (family.total_size() > total_cap)
        throw SizeLimit("family of " + std::to_string(family.total_size()) +
                        " total cells exceeds the cap of " +
                        std::to_string(total_cap));
    if (family.count() == 0)
        throw HypothesisViolated("empty family has no product set");

    LRProductSet out;
    out.family = family.members();
    out.d = family.d();

    LrExpansion dist;
    dist[family.members()[0]] = 1;
    for (int i = 1; i < family.count(); ++i) {
        LrExpansion next;
        for (const auto& [kappa, mult] : dist) {
            LrExpansion step = lr_expand(kappa, family.members()[i], total_cap);
            for (const auto& [tau, c] : step) {
                if (prune_intermediates && tau.rows() > family.d()) continue;
                next[tau] += mult * c;
            }
        }
        dist.swap(next);
    }
    for (const auto& [nu, c] : dist) {
        if (nu.rows() <= family.d() && c > 0) out.coefficients[nu] = c;
    }
    return out;
}

std::vector<std::pair<int, int>> weyl_bounds(const Partition& lambda,
                                             const Partition& mu, int d) {
    std::vector<std::pair<int, int>> out;
    out.reserve(d);
    for (int k = 1; k <= d; ++k) {
        int lower = 0;
        for (int i = 1; i <= d; ++i) {
            int j = k + d - i;
            if (j < 1 || j > d) continue;
            lower = std::max(lower, lambda.part(i) + mu.part(j));
        }
        int upper = -1;
        for (int i = 1; i <= d; ++i) {
            int j = k + 1 - i;
            if (j < 1 || j > d) continue;
            int v = lambda.part(i) + mu.part(j);
            if (upper < 0 || v < upper) upper = v;
        }
        out.emplace_back(lower, upper);
    }
    return out;
}

int conjugate_exclusion_margin(const Partition& lambda, const Partition& mu,
                               int d) {
    int best = 0;
    for (int i = 1; i <= d; ++i) {
        int j = 1 + d - i;
        best = std::max(best, lambda.part(i) + mu.part(j));
    }
    return best;
}

bool no_conjugates_pair(const Partition& lambda, const Partition& mu, int d) {
    if (!lambda.is_self_conjugate() || !mu.is_self_conjugate())
        throw HypothesisViolated(
            "criterion requires both partitions self-conjugate");
    return conjugate_exclusion_margin(lambda, mu, d) > d;
}

}  // namespace exou
