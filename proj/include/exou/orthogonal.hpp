#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "exou/tableau.hpp"

namespace exou {

/// Permutation of {1..n}, stored in one-line form.
class Permutation {
public:
    explicit Permutation(int n);  // identity
    /// images[i-1] = image of i.
    explicit Permutation(std::vector<int> images);

    static Permutation transposition(int n, int a, int b);
    static Permutation adjacent(int n, int i) {
        return transposition(n, i, i + 1);
    }
    /// Parses disjoint-cycle notation, e.g. "(1 2)(3 4)" or "(1,3)".
    static Permutation from_cycles(int n, const std::string& text);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int k) const { return images_[k - 1]; }
    bool is_identity() const;

    /// Adjacent-transposition word (bubble sort of the one-line form):
    /// the permutation equals the product of s_i over the word read
    /// right-to-left applied first.
    std::vector<int> adjacent_word() const;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// Dense real matrix of a map between tableau-basis spaces. For operators
/// both shapes agree; the alternating intertwiner maps shape -> conjugate.
struct RepMatrix {
    Partition col_shape;  // domain labels, canonical tableau order
    Partition row_shape;  // codomain labels
    Eigen::MatrixXd mat;

    const Partition& shape() const { return col_shape; }
};

struct CheckReport {
    std::string name;
    bool passed = false;
    double max_violation = 0.0;
    double tolerance = 0.0;
    std::string details;
};

CheckReport make_report(std::string name, double violation, double tolerance,
                        std::string details = "");

/// Young's orthogonal form of the adjacent transposition (i, i+1).
RepMatrix adjacent_matrix(const Partition& shape, int i, int cell_cap = 20);

/// Product of adjacent matrices along the bubble-sort word of s.
RepMatrix permutation_matrix(const Partition& shape, const Permutation& s,
                             int cell_cap = 20);

/// Sum of transpositions (i k) for i < k; diagonal with content eigenvalues.
RepMatrix jucys_murphy_matrix(const Partition& shape, int k,
                              int cell_cap = 20);

/// Map T -> w(T) T' in canonical bases (rows labelled by the conjugate
/// shape); square when the shape is self-conjugate.
RepMatrix alternating_intertwiner(const Partition& shape, int cell_cap = 20);

/// Structural checks for one shape: generator orthogonality and involution,
/// braid and commutation relations, Jucys-Murphy diagonality with content
/// eigenvalues, the conjugation relation through the alternating
/// intertwiner, the bilinear-form membership sample for self-conjugate
/// shapes, and the symmetry rule for the intertwiner.
std::vector<CheckReport> verify_structure(const Partition& shape,
                                          double element_tol = 1e-9,
                                          double product_tol = 1e-8,
                                          int cell_cap = 20);

}  // namespace exou
