#include "exou/universality.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace exou {

namespace {

std::string plist(const std::vector<Partition>& ps) {
    std::string out;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ", ";
        out += ps[i].to_string();
    }
    return out;
}

void require_nontrivial(const Partition& p) {
    if (p.is_trivial())
        throw TrivialPartition("partition " + p.to_string() +
                               " labels a one-dimensional representation");
}

/// Hooks survive in the product set at row bound d iff every member is a
/// hook and the total row count stays under N + d.
bool hooks_in_product_set(const std::vector<Partition>& members, int d) {
    int row_sum = 0;
    for (const Partition& m : members) {
        if (m.part(2) != 1) return false;  // a proper member blocks hooks
        row_sum += m.rows();
    }
    return row_sum < static_cast<int>(members.size()) + d;
}

/// Blocking labels inside a product set: hooks always; self-conjugate labels
/// and conjugate pairs only when the conjugate constraint binds (every
/// family member self-conjugate).
std::vector<Partition> blocking_labels(const LRProductSet& set,
                                       bool include_conjugates) {
    std::vector<Partition> out;
    for (const auto& [nu, c] : set.coefficients) {
        if (nu.is_hook() ||
            (include_conjugates &&
             (nu.is_self_conjugate() || set.contains(nu.conjugate()))))
            out.push_back(nu);
    }
    return out;
}

void attach_witnesses(UniversalityVerdict& verdict,
                      const PartitionFamily& family, const EngineConfig& cfg) {
    if (family.total_size() > cfg.lr_total_cap) return;
    LRProductSet set = product_set(family, cfg.lr_total_cap);
    std::vector<Partition> blockers =
        blocking_labels(set, family.all_members_self_conjugate());
    if (!blockers.empty()) {
        verdict.witness_partitions = std::move(blockers);
        verdict.rule_trace.push_back(
            {"product-scan",
             "blocking labels in the product set: " +
                 plist(*verdict.witness_partitions)});
    }
}

std::uint64_t product_dimension(const std::vector<Partition>& members) {
    std::uint64_t dim = 1;
    for (const Partition& m : members) dim *= dimension(m);
    return dim;
}

}  // namespace

UniversalityVerdict single_universal(const Partition& mu) {
    if (mu.empty()) throw TrivialPartition("empty partition");
    UniversalityVerdict v;
    v.d = mu.rows();
    PartitionClass cls = classify(mu);
    switch (cls.kind) {
        case PartitionKind::TrivialRow:
        case PartitionKind::TrivialColumn:
            v.decision = Decision::Universal;
            v.rule_trace.push_back(
                {"single-trivial",
                 mu.to_string() + " is one-dimensional; nothing to generate"});
            return v;
        case PartitionKind::ShallowHook:
            v.decision = Decision::Universal;
            v.rule_trace.push_back(
                {"single-shallow-hook",
                 mu.to_string() +
                     " is a shallow hook; the image is the full traceless "
                     "algebra on it"});
            return v;
        case PartitionKind::DeepHook:
            v.decision = Decision::NotUniversal;
            v.rule_trace.push_back(
                {"single-deep-hook",
                 mu.to_string() +
                     " is a deep hook; its operators are exterior powers of "
                     "the shallow-hook action and never fill the unitary "
                     "algebra"});
            return v;
        case PartitionKind::Proper:
            break;
    }
    if (!mu.is_self_conjugate()) {
        v.decision = Decision::Universal;
        v.rule_trace.push_back(
            {"single-proper",
             mu.to_string() + " is proper and not self-conjugate"});
    } else if (mu == Partition{2, 2}) {
        v.decision = Decision::Universal;
        v.rule_trace.push_back(
            {"single-square",
             "[2,2] is the two-dimensional exception: its symplectic "
             "constraint algebra already equals the full traceless algebra"});
    } else {
        v.decision = Decision::NotUniversal;
        v.rule_trace.push_back(
            {"single-self-conjugate",
             mu.to_string() +
                 " is proper and self-conjugate; its image is pinned inside "
                 "the orthosymplectic subalgebra"});
    }
    return v;
}

UniversalityVerdict pair_universal(const Partition& lambda,
                                   const Partition& mu, int d,
                                   const EngineConfig& cfg) {
    require_nontrivial(lambda);
    require_nontrivial(mu);
    if (lambda.rows() > d || mu.rows() > d)
        throw RowBound("pair members must have at most d = " +
                       std::to_string(d) + " rows");
    UniversalityVerdict v;
    v.d = d;

    bool all_hooks = lambda.part(2) == 1 && mu.part(2) == 1;
    if (all_hooks && lambda.rows() + mu.rows() <= d + 1) {
        v.decision = Decision::NotUniversal;
        std::ostringstream reason;
        reason << "both members are hooks and " << lambda.rows() << " + "
               << mu.rows() << " <= d + 1 = " << d + 1
               << ", so the product set keeps a hook";
        v.rule_trace.push_back({"hook-obstruction", reason.str()});
        attach_witnesses(v, PartitionFamily({lambda, mu}, d), cfg);
        return v;
    }
    if (lambda.is_self_conjugate() && mu.is_self_conjugate()) {
        int margin = conjugate_exclusion_margin(lambda, mu, d);
        if (margin <= d) {
            v.decision = Decision::NotUniversal;
            std::ostringstream reason;
            reason << "both members are self-conjugate and max(lambda_i + "
                      "mu_j) over i + j = 1 + d is "
                   << margin << " <= d = " << d
                   << ", so the product set keeps conjugates";
            v.rule_trace.push_back({"conjugate-obstruction", reason.str()});
            attach_witnesses(v, PartitionFamily({lambda, mu}, d), cfg);
            return v;
        }
        v.decision = Decision::Universal;
        std::ostringstream reason;
        reason << "no hooks survive the row bound and max(lambda_i + mu_j) "
                  "over i + j = 1 + d is "
               << margin << " > d = " << d
               << ", so the product set is free of conjugates";
        v.rule_trace.push_back({"pair-criteria", reason.str()});
        return v;
    }
    v.decision = Decision::Universal;
    v.rule_trace.push_back(
        {"pair-criteria",
         "no hooks survive the row bound and some member is not "
         "self-conjugate"});
    return v;
}

UniversalityVerdict family_universal(const PartitionFamily& family,
                                     const EngineConfig& cfg) {
    const std::vector<Partition>& members = family.members();
    if (members.empty())
        throw HypothesisViolated("family must contain at least one partition");

    UniversalityVerdict v;
    v.d = family.d();

    if (members.size() == 1) {
        if (members[0].empty()) throw TrivialPartition("empty partition");
        UniversalityVerdict single = single_universal(members[0]);
        single.d = family.d();
        single.rule_trace.insert(
            single.rule_trace.begin(),
            {"singleton",
             "the product set of a singleton is the member itself"});
        return single;
    }

    if (product_dimension(members) <= 2) {
        v.decision = Decision::Universal;
        v.rule_trace.push_back(
            {"small-dimension",
             "the product representation has dimension at most 2, where "
             "universality reduces to the lone nontrivial member"});
        return v;
    }
    if (family.any_trivial_member()) {
        bool has_proper = std::any_of(
            members.begin(), members.end(),
            [](const Partition& m) { return m.is_proper(); });
        bool member_not_self_conj = std::any_of(
            members.begin(), members.end(),
            [](const Partition& m) { return !m.is_self_conjugate(); });
        if (has_proper && member_not_self_conj) {
            v.decision = Decision::Universal;
            v.rule_trace.push_back(
                {"non-self-conjugate",
                 "a proper member rules hooks out and a non-self-conjugate "
                 "member frees the conjugate constraint, trivial members "
                 "notwithstanding"});
            return v;
        }
        throw TrivialPartition(
            "family mixes one-dimensional labels with hooks (or is entirely "
            "self-conjugate); no decision procedure is known for this case");
    }

    if (family.d() <= 2) {
        v.decision = Decision::Universal;
        v.rule_trace.push_back(
            {"two-row",
             "families of at-most-two-row partitions are always universal at "
             "d <= 2"});
        return v;
    }

    if (members.size() == 2) {
        UniversalityVerdict pair =
            pair_universal(members[0], members[1], family.d(), cfg);
        return pair;
    }

    if (hooks_in_product_set(members, family.d())) {
        v.decision = Decision::NotUniversal;
        std::ostringstream reason;
        int row_sum = 0;
        for (const Partition& m : members) row_sum += m.rows();
        reason << "every member is a hook and the total row count " << row_sum
               << " is below N + d = " << members.size() + family.d()
               << ", so a hook survives in the product set";
        v.rule_trace.push_back({"hook-obstruction", reason.str()});
        attach_witnesses(v, family, cfg);
        return v;
    }

    if (!family.all_members_self_conjugate()) {
        v.decision = Decision::Universal;
        v.rule_trace.push_back(
            {"non-self-conjugate",
             "hooks are excluded and some member is not self-conjugate, "
             "which frees the conjugate constraint"});
        return v;
    }

    if (family.total_size() > family.d() * family.d()) {
        std::ostringstream reason;
        reason << "hooks are excluded and the total size "
               << family.total_size() << " exceeds d^2 = "
               << family.d() * family.d()
               << ", which forces every surviving label past its conjugate";
        if (3 * family.count() > family.d() * family.d())
            reason << " (already guaranteed by the member count "
                   << family.count() << " > d^2/3)";
        v.decision = Decision::Universal;
        v.rule_trace.push_back({"size-bound", reason.str()});
        return v;
    }

    LRProductSet set = product_set(family, cfg.lr_total_cap);
    std::vector<Partition> blockers = blocking_labels(set, true);
    if (blockers.empty()) {
        v.decision = Decision::Universal;
        v.rule_trace.push_back(
            {"product-scan",
             "the product set contains no hooks and no conjugates"});
    } else {
        v.decision = Decision::NotUniversal;
        v.rule_trace.push_back(
            {"product-scan",
             "blocking labels in the product set: " + plist(blockers)});
        v.witness_partitions = std::move(blockers);
    }
    return v;
}

UniversalityVerdict family_universal_by_scan(const PartitionFamily& family,
                                             const EngineConfig& cfg) {
    for (const Partition& m : family.members()) require_nontrivial(m);
    UniversalityVerdict v;
    v.d = family.d();
    LRProductSet set = product_set(family, cfg.lr_total_cap);

    std::vector<Partition> blockers;
    for (const auto& [nu, c] : set.coefficients) {
        if (nu.is_hook()) blockers.push_back(nu);
    }
    if (family.all_members_self_conjugate()) {
        for (const auto& [nu, c] : set.coefficients) {
            if (nu.is_hook()) continue;
            if (nu.is_self_conjugate() || set.contains(nu.conjugate()))
                blockers.push_back(nu);
        }
    }
    if (blockers.empty()) {
        v.decision = Decision::Universal;
        v.rule_trace.push_back(
            {"product-scan", "no blocking labels in the product set"});
    } else {
        v.decision = Decision::NotUniversal;
        std::sort(blockers.begin(), blockers.end());
        v.rule_trace.push_back(
            {"product-scan",
             "blocking labels in the product set: " + plist(blockers)});
        v.witness_partitions = std::move(blockers);
    }
    return v;
}

namespace {

/// Self-conjugate nontrivial partitions with at most d rows (sizes <= d^2),
/// ascending by (size, parts).
std::vector<Partition> self_conjugate_pool(int d) {
    std::vector<Partition> pool;
    for (int n = 3; n <= d * d; ++n) {
        for (const Partition& p : partitions_of(n, d)) {
            if (!p.is_trivial() && p.is_self_conjugate()) pool.push_back(p);
        }
    }
    std::sort(pool.begin(), pool.end(),
              [](const Partition& a, const Partition& b) {
                  return std::make_pair(a.size(), a.parts()) <
                         std::make_pair(b.size(), b.parts());
              });
    return pool;
}

bool contains_submultiset(const std::vector<Partition>& sorted_family,
                          const std::vector<Partition>& sorted_sub) {
    size_t i = 0;
    for (const Partition& p : sorted_family) {
        if (i < sorted_sub.size() && sorted_sub[i] == p) ++i;
    }
    return i == sorted_sub.size();
}

}  // namespace

MinimalFamilySet minimal_universal_families(int d, const EngineConfig& cfg) {
    if (d < 2) throw HypothesisViolated("need d >= 2");
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::milliseconds(cfg.time_budget_ms);
    auto check_budget = [&]() {
        if (d > 4 && std::chrono::steady_clock::now() > deadline)
            throw BudgetExceeded("minimal-family search for d = " +
                                 std::to_string(d) +
                                 " exceeded the time budget");
    };

    std::vector<Partition> pool = self_conjugate_pool(d);
    int max_members = (d * d) / 3 + 1;

    std::map<std::vector<Partition>, bool> verdict_cache;
    auto universal = [&](const std::vector<Partition>& members) {
        std::vector<Partition> key = members;
        auto it = verdict_cache.find(key);
        if (it != verdict_cache.end()) return it->second;
        check_budget();
        bool result =
            family_universal(PartitionFamily(members, d), cfg).universal();
        verdict_cache[key] = result;
        return result;
    };

    MinimalFamilySet out;
    out.d = d;

    std::vector<Partition> acc;
    std::function<void(size_t, int)> search = [&](size_t start, int count) {
        if (count >= 2) {
            bool covered = std::any_of(
                out.families.begin(), out.families.end(),
                [&](const std::vector<Partition>& found) {
                    return contains_submultiset(acc, found);
                });
            if (covered) {
                // Universal by upward closure through a smaller minimal
                // family found earlier; no superset can be minimal.
                return;
            }
            if (universal(acc)) {
                bool minimal = true;
                if (count > 2) {
                    for (size_t skip = 0; skip < acc.size() && minimal;
                         ++skip) {
                        if (skip > 0 && acc[skip] == acc[skip - 1]) continue;
                        std::vector<Partition> sub;
                        for (size_t i = 0; i < acc.size(); ++i)
                            if (i != skip) sub.push_back(acc[i]);
                        if (universal(sub)) minimal = false;
                    }
                }
                if (minimal) out.families.push_back(acc);
                return;  // supersets of a universal family are not minimal
            }
        }
        if (count == max_members) return;
        for (size_t i = start; i < pool.size(); ++i) {
            acc.push_back(pool[i]);
            search(i, count + 1);
            acc.pop_back();
        }
    };
    search(0, 0);

    std::sort(out.families.begin(), out.families.end(),
              [](const std::vector<Partition>& a,
                 const std::vector<Partition>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  for (size_t i = 0; i < a.size(); ++i) {
                      auto ka = std::make_pair(a[i].size(), a[i].parts());
                      auto kb = std::make_pair(b[i].size(), b[i].parts());
                      if (ka != kb) return ka < kb;
                  }
                  return false;
              });
    return out;
}

Partition ancilla_suggestion(const PartitionFamily& family,
                             const EngineConfig& cfg) {
    const std::vector<Partition>& members = family.members();
    if (members.empty())
        throw HypothesisViolated("family must contain at least one partition");
    for (const Partition& m : members) require_nontrivial(m);

    bool has_proper = std::any_of(members.begin(), members.end(),
                                  [](const Partition& m) {
                                      return m.is_proper();
                                  });
    bool self_conjugate = family.all_members_self_conjugate();

    std::vector<Partition> candidates;
    if (has_proper && self_conjugate) candidates.push_back(Partition{2});
    if (family.all_members_hooks()) candidates.push_back(Partition{2, 2});
    candidates.push_back(Partition{3, 2});

    for (const Partition& extra : candidates) {
        std::vector<Partition> extended = members;
        extended.push_back(extra);
        int d = std::max(family.d(), extra.rows());
        try {
            if (family_universal(PartitionFamily(extended, d), cfg)
                    .universal())
                return extra;
        } catch (const TrivialPartition&) {
            // the [2] route is undecidable for this family; try the next fix
        }
    }
    throw Inconsistent("no ancilla verified; this cannot happen");
}

std::pair<Partition, UniversalityVerdict> cartan_target(
    const PartitionFamily& family, const EngineConfig& cfg) {
    const std::vector<Partition>& members = family.members();
    if (members.size() < 2)
        throw SingleMember("the highest-weight target needs at least two "
                           "member partitions");
    for (const Partition& m : members) require_nontrivial(m);

    Partition nu;
    for (const Partition& m : members) nu = partwise_sum(nu, m);

    UniversalityVerdict v;
    v.d = family.d();
    v.decision = Decision::Universal;
    std::ostringstream reason;
    reason << "the part-wise sum " << nu.to_string()
           << " is the highest-weight component of the product; it is proper";
    bool member_not_self_conj = std::any_of(
        members.begin(), members.end(),
        [](const Partition& m) { return !m.is_self_conjugate(); });
    if (member_not_self_conj)
        reason << " and some member is not self-conjugate";
    else
        reason << " and strictly wider than tall, hence not self-conjugate";
    v.rule_trace.push_back({"highest-weight", reason.str()});

    // Cross-check the guarantees the reason quotes.
    if (!nu.is_proper() ||
        (nu.is_self_conjugate() && !member_not_self_conj))
        throw Inconsistent("highest-weight target failed its invariants");
    return {nu, v};
}

CheckReport upward_closed_check(const PartitionFamily& family,
                                const EngineConfig& cfg) {
    const std::vector<Partition>& members = family.members();
    for (const Partition& m : members) require_nontrivial(m);

    bool family_ok = family_universal(family, cfg).universal();
    bool some_subfamily_ok = false;
    std::string witness;

    int n = family.count();
    for (int mask = 1; mask < (1 << n) && !some_subfamily_ok; ++mask) {
        int bits = __builtin_popcount(static_cast<unsigned>(mask));
        if (bits < 2 || bits == n) continue;
        std::vector<Partition> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) sub.push_back(members[i]);
        if (family_universal(PartitionFamily(sub, family.d()), cfg)
                .universal()) {
            some_subfamily_ok = true;
            witness = plist(sub);
        }
    }

    bool violated = some_subfamily_ok && !family_ok;
    CheckReport r = make_report("upward closure of " + family.to_string(),
                                violated ? 1.0 : 0.0, 0.0);
    if (violated)
        r.details = "universal subfamily " + witness +
                    " inside a non-universal family";
    return r;
}

}  // namespace exou
