#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "exou/partition.hpp"

namespace exou {

/// Skew diagram: cells of `outer` not in `inner`; requires inner_i <= outer_i.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_, Partition inner_)
        : outer(std::move(outer_)), inner(std::move(inner_)) {
        if (!outer.contains(inner))
            throw HypothesisViolated("inner shape " + inner.to_string() +
                                     " not contained in " + outer.to_string());
    }

    int cell_count() const { return outer.size() - inner.size(); }
};

using LrExpansion = std::map<Partition, std::uint64_t>;

/// Count of skew semistandard tableaux of shape nu\lambda and weight mu whose
/// reverse reading word is a lattice word. 0 on any size or containment
/// mismatch.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu);

/// Full decomposition of the product lambda x mu: nu -> coefficient.
/// Raises SizeLimit when |lambda| + |mu| exceeds total_cap.
LrExpansion lr_expand(const Partition& lambda, const Partition& mu,
                      int total_cap = 30);

/// Iterated coefficient over the family with final label nu.
std::uint64_t multi_lr_coefficient(const std::vector<Partition>& members,
                                   const Partition& nu);

/// Product set of a family at row bound d: labels with positive iterated
/// coefficient and at most d rows.
struct LRProductSet {
    std::vector<Partition> family;
    int d = 0;
    LrExpansion coefficients;  // keys sorted; exactly the member set

    bool contains(const Partition& nu) const {
        return coefficients.count(nu) > 0;
    }
};

/// prune_intermediates drops intermediate labels with more than d rows, which
/// is exact because row counts only grow along the iteration; the unpruned
/// route is kept for cross-checking.
LRProductSet product_set(const PartitionFamily& family, int total_cap = 30,
                         bool prune_intermediates = true);

/// Per-index bounds on nu_k over {nu | c_{lambda,mu}^nu > 0, nu'_1 = d}:
/// lower_k = max_{i+j=k+d} (lambda_i + mu_j), upper_k = min_{i+j=k+1} (...),
/// with 1 <= i, j <= d and missing parts read as 0.
std::vector<std::pair<int, int>> weyl_bounds(const Partition& lambda,
                                             const Partition& mu, int d);

/// For self-conjugate lambda and mu: true iff the product set at row bound d
/// contains no self-conjugate label and no conjugate pair, decided by the
/// arithmetic criterion max_{i+j=1+d}(lambda_i + mu_j) > d.
bool no_conjugates_pair(const Partition& lambda, const Partition& mu, int d);

/// The arithmetic left-hand side above, usable without the self-conjugacy
/// hypothesis.
int conjugate_exclusion_margin(const Partition& lambda, const Partition& mu,
                               int d);

}  // namespace exou
