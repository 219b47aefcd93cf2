#pragma once

#include <cstdint>
#include <vector>

#include "exou/orthogonal.hpp"
#include "exou/universality.hpp"

namespace exou {

struct VerifyOptions {
    int max_n = 7;             // representation checks run on shapes <= max_n
    int lr_max_total = 10;     // exhaustive coefficient sweeps
    int cross_max_total = 10;  // pair cross-validation sweep
    double element_tol = 1e-9;
    double product_tol = 1e-8;
    std::uint64_t seed = 0x5eed;
};

/// Representation numerics for every shape with at most max_n cells.
std::vector<CheckReport> representation_checks(const VerifyOptions& opt);

/// Coefficient symmetries, the support bound, the part-wise-sum coefficient,
/// and soundness of the per-index bounds, swept exhaustively.
std::vector<CheckReport> coefficient_checks(const VerifyOptions& opt);

/// Arithmetic criteria against the product-set scan: pair decisions, hook
/// exclusion, and conjugate exclusion.
std::vector<CheckReport> decision_checks(const VerifyOptions& opt);

/// Tableau counting identities and the physical-map residuals.
std::vector<CheckReport> counting_checks(const VerifyOptions& opt);

/// All of the above, sorted by name.
std::vector<CheckReport> run_all_checks(const VerifyOptions& opt);

}  // namespace exou
