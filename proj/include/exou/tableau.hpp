#pragma once

#include <cstdint>
#include <vector>

#include "exou/partition.hpp"

namespace exou {

/// Standard Young tableau: the numbers 1..n fill the diagram of `shape`,
/// strictly increasing along rows and down columns.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    /// Builds from per-entry positions: row_of[k-1], col_of[k-1] for entry k.
    static StandardTableau from_positions(Partition shape,
                                          std::vector<int> row_of,
                                          std::vector<int> col_of);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// 1-based row/column of entry k.
    int row_of(int k) const;
    int col_of(int k) const;

    int entry(int row, int col) const { return rows_[row - 1][col - 1]; }

    /// Content of entry k: column minus row.
    int content(int k) const { return col_of(k) - row_of(k); }

    /// Word (row_of(1), ..., row_of(n)); fixes the canonical basis order.
    const std::vector<int>& row_word() const { return row_word_; }

    /// Entries i and i+1 share a row or column (swapping them is invalid).
    bool adjacent_in_line(int i) const;

    /// Tableau with entries i and i+1 exchanged; only valid off rows/columns.
    StandardTableau swapped(int i) const;

    /// Transposed tableau, of conjugate shape.
    StandardTableau transposed() const;

    /// (-1)^(number of pairs i<j with row_of(i) > row_of(j)).
    int alternating_sign() const;

    bool operator==(const StandardTableau& other) const {
        return rows_ == other.rows_;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_word_;
    std::vector<int> col_word_;
};

using ContentVector = std::vector<int>;

ContentVector content_vector(const StandardTableau& t);

/// Axial distance d_T(i, j) = content(j) - content(i).
int axial_distance(const StandardTableau& t, int i, int j);

/// All standard tableaux of the shape, in the canonical order (row words in
/// descending lexicographic order). Shapes above the cap raise SizeLimit.
std::vector<StandardTableau> enumerate_standard(const Partition& shape,
                                                int cell_cap = 20);

/// Number of standard tableaux (hook-length formula); exact.
std::uint64_t dimension(const Partition& shape);

/// Number of semistandard fillings with entries in 1..d; 0 when the shape
/// has more than d rows.
std::uint64_t weyl_dimension(const Partition& shape, int d);

/// Index of a tableau in the canonical order of its shape.
int canonical_index(const std::vector<StandardTableau>& basis,
                    const StandardTableau& t);

/// Inverse of the content-vector map; raises Inconsistent when no standard
/// tableau realizes the vector.
StandardTableau tableau_from_content_vector(const ContentVector& cv);

}  // namespace exou
