#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exou/lr.hpp"
#include "exou/orthogonal.hpp"
#include "exou/partition.hpp"

namespace exou {

enum class Decision { Universal, NotUniversal };

struct RuleStep {
    std::string rule;
    std::string reason;
};

/// Decision plus the audit trail of which criterion fired. Witness labels
/// are present exactly when non-universality was confirmed (or illustrated)
/// by scanning the product set.
struct UniversalityVerdict {
    Decision decision = Decision::NotUniversal;
    int d = 0;
    std::vector<RuleStep> rule_trace;
    std::optional<std::vector<Partition>> witness_partitions;

    bool universal() const { return decision == Decision::Universal; }
};

struct EngineConfig {
    int lr_total_cap = 30;
    int time_budget_ms = 300000;
};

/// Whether the single logical qudit labelled by mu admits every unitary on
/// itself: proper non-self-conjugate shapes, the 2x2 square, trivial shapes,
/// and shallow hooks qualify; deep hooks and proper self-conjugate shapes do
/// not.
UniversalityVerdict single_universal(const Partition& mu);

/// Arithmetic decision for a pair of nontrivial partitions at row bound d.
UniversalityVerdict pair_universal(const Partition& lambda,
                                   const Partition& mu, int d,
                                   const EngineConfig& cfg = {});

/// Full decision pipeline for a family at row bound family.d(): fast
/// arithmetic criteria first, product-set scan as the fallback.
UniversalityVerdict family_universal(const PartitionFamily& family,
                                     const EngineConfig& cfg = {});

/// Product-set route applied directly (the slow exact path): universal iff
/// the product set has no hooks and, when every member is self-conjugate,
/// no self-conjugate label and no conjugate pair. Used as the cross-check
/// against the arithmetic criteria.
UniversalityVerdict family_universal_by_scan(const PartitionFamily& family,
                                             const EngineConfig& cfg = {});

struct MinimalFamilySet {
    int d = 0;
    /// Sorted canonical families (members ascending by size then parts).
    std::vector<std::vector<Partition>> families;
};

/// Exact set of minimal d-universal families of multiple nontrivial
/// self-conjugate partitions. d in {2,3,4} runs directly; larger d only
/// within the configured time budget.
MinimalFamilySet minimal_universal_families(int d,
                                            const EngineConfig& cfg = {});

/// Smallest of the applicable ancilla fixes ([2], [2,2], [3,2]) whose
/// addition makes the family d-universal; the returned label is verified by
/// re-running the family decision.
Partition ancilla_suggestion(const PartitionFamily& family,
                             const EngineConfig& cfg = {});

/// The part-wise sum target (highest-weight component) and its verdict;
/// always universal for families of multiple nontrivial partitions.
std::pair<Partition, UniversalityVerdict> cartan_target(
    const PartitionFamily& family, const EngineConfig& cfg = {});

/// Upward-closure probe: passes unless some subfamily with at least two
/// members is universal while the family itself is not.
CheckReport upward_closed_check(const PartitionFamily& family,
                                const EngineConfig& cfg = {});

}  // namespace exou
