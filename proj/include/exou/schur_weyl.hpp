#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "exou/orthogonal.hpp"
#include "exou/universality.hpp"

namespace exou {

/// Logical information per physical d-state system: log_d(dim) / |lambda|.
double coding_efficiency(int d, const Partition& lambda);

struct EfficiencyRow {
    int n = 0;
    int d = 0;
    Partition best_partition;
    std::uint64_t dim = 0;
    double efficiency = 0.0;
};

/// Per (n, d): the partition of n with at most d rows, universal on itself,
/// of maximal dimension; ties resolved by larger second part, then by
/// lexicographically larger parts.
std::vector<EfficiencyRow> efficiency_table(int n_min, int n_max,
                                            const std::vector<int>& d_list);

/// Product of member dimensions times the iterated coefficient at nu.
std::uint64_t isotypic_dimension(const PartitionFamily& family,
                                 const Partition& nu);

/// Tableau-basis vectors of a two-row shape realized on n two-state systems,
/// one vector per (standard tableau, collective weight).
struct PhysicalBasisMap {
    Partition shape;
    int n = 0;
    std::vector<StandardTableau> basis;   // canonical order
    std::vector<int> twice_weights;      // 2m, from +2S down to -2S
    /// vectors[w].col(t): coefficients over the 2^n computational states of
    /// the tableau basis[t] at weight twice_weights[w]. Bit k of a state
    /// index (0 = leftmost system) set means that system is in state |1>.
    std::vector<Eigen::MatrixXd> vectors;

    int weight_index(int twice_m) const;
    Eigen::VectorXd vector(int tableau_index, int twice_m) const;
};

/// Builds the map by solving the weight-sector constraints for the first
/// tableau, propagating along adjacent swaps, lowering through the weights,
/// and mirroring negative weights with the global bit flip.
PhysicalBasisMap physical_basis_map(const Partition& shape, int max_n = 10);

/// Verifies that flipping every bit carries the (T, m) vector to +-1 times
/// the (T, -m) vector with a tableau-independent sign.
CheckReport collective_noise_check(const PhysicalBasisMap& map,
                                   double tol = 1e-9);

/// Residual diagnostics used by tests and the verification runner.
double orthonormality_residual(const PhysicalBasisMap& map);
double equivariance_residual(const PhysicalBasisMap& map);
double weight_residual(const PhysicalBasisMap& map);

std::string format_ket(std::uint32_t state, int n);

}  // namespace exou
