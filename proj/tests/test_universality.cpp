#include <doctest.h>

#include <algorithm>

#include "exou/universality.hpp"

using namespace exou;

namespace {

bool trace_mentions(const UniversalityVerdict& v, const std::string& rule) {
    return std::any_of(v.rule_trace.begin(), v.rule_trace.end(),
                       [&](const RuleStep& s) { return s.rule == rule; });
}

bool witnesses_contain(const UniversalityVerdict& v, const Partition& p) {
    return v.witness_partitions &&
           std::find(v.witness_partitions->begin(),
                     v.witness_partitions->end(),
                     p) != v.witness_partitions->end();
}

std::vector<Partition> nontrivial_partitions(int n, int max_rows) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(n, max_rows))
        if (!p.is_trivial()) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("single-partition criteria") {
    CHECK(single_universal(Partition{4, 2, 1}).universal());
    CHECK_FALSE(single_universal(Partition{3, 1, 1}).universal());
    CHECK(single_universal(Partition{2, 2}).universal());
    CHECK_FALSE(single_universal(Partition{3, 2, 1}).universal());
    CHECK_FALSE(single_universal(Partition{4, 1, 1}).universal());

    CHECK(single_universal(Partition{6}).universal());
    CHECK(single_universal(Partition{1, 1, 1, 1}).universal());
    CHECK(single_universal(Partition{5, 1}).universal());
    CHECK(single_universal(Partition{2, 1, 1, 1}).universal());
    CHECK(single_universal(Partition{2, 1}).universal());

    CHECK_THROWS_AS(single_universal(Partition{}), TrivialPartition);
}

TEST_CASE("pair criteria") {
    UniversalityVerdict hooks = pair_universal(Partition{2, 1},
                                               Partition{3, 1}, 3);
    CHECK_FALSE(hooks.universal());
    CHECK(trace_mentions(hooks, "hook-obstruction"));

    CHECK(pair_universal(Partition{2, 2}, Partition{2, 2}, 3).universal());
    UniversalityVerdict squares =
        pair_universal(Partition{2, 2}, Partition{2, 2}, 4);
    CHECK_FALSE(squares.universal());
    CHECK(trace_mentions(squares, "conjugate-obstruction"));

    CHECK(pair_universal(Partition{2, 1}, Partition{2, 1}, 2).universal());

    CHECK_THROWS_AS(pair_universal(Partition{3}, Partition{2, 1}, 3),
                    TrivialPartition);
    CHECK_THROWS_AS(pair_universal(Partition{2, 1, 1}, Partition{2, 1}, 2),
                    RowBound);
}

TEST_CASE("family decisions match the worked cases") {
    UniversalityVerdict two_triangles =
        family_universal(PartitionFamily({Partition{2, 1}, Partition{2, 1}}, 3));
    CHECK_FALSE(two_triangles.universal());
    CHECK(witnesses_contain(two_triangles, Partition{3, 2, 1}));

    CHECK(family_universal(PartitionFamily(
                               {Partition{2, 2}, Partition{2, 1}, Partition{2, 1}},
                               3))
              .universal());

    CHECK(family_universal(PartitionFamily({Partition{2, 1}, Partition{2, 1},
                                            Partition{2, 1}, Partition{2, 1}},
                                           3))
              .universal());

    UniversalityVerdict three_triangles = family_universal(PartitionFamily(
        {Partition{2, 1}, Partition{2, 1}, Partition{2, 1}}, 3));
    CHECK_FALSE(three_triangles.universal());
    CHECK(witnesses_contain(three_triangles, Partition{3, 3, 3}));

    // Two-row families are always universal at d = 2.
    CHECK(family_universal(
              PartitionFamily({Partition{5, 1}, Partition{2, 2},
                               Partition{2, 1}},
                              2))
              .universal());

    // Hook rule at the d that admits the surviving hook.
    UniversalityVerdict mixed_hooks = family_universal(
        PartitionFamily({Partition{2, 1}, Partition{2, 1, 1}}, 4));
    CHECK_FALSE(mixed_hooks.universal());
    CHECK(trace_mentions(mixed_hooks, "hook-obstruction"));
    // The same pair is universal at d = 3: no hook fits under the row bound.
    CHECK(family_universal(
              PartitionFamily({Partition{2, 1}, Partition{2, 1, 1}}, 3))
              .universal());
}

TEST_CASE("trivial members") {
    CHECK_THROWS_AS(
        family_universal(PartitionFamily({Partition{3, 1}, Partition{4}}, 4)),
        TrivialPartition);
    // Dimension <= 2 reduces to the lone nontrivial member.
    CHECK(family_universal(PartitionFamily({Partition{2, 1}, Partition{3}}, 3))
              .universal());
    // A proper member and a non-self-conjugate member decide the mix.
    CHECK(family_universal(PartitionFamily(
                               {Partition{3, 2, 1}, Partition{3, 2, 1},
                                Partition{2}},
                               3))
              .universal());
}

TEST_CASE("arithmetic pipeline agrees with the product-set scan") {
    for (int total = 6; total <= 11; ++total) {
        for (int l = 3; l <= total - 3; ++l) {
            for (const Partition& lambda : nontrivial_partitions(l, 4)) {
                for (const Partition& mu :
                     nontrivial_partitions(total - l, 4)) {
                    for (int d = 3; d <= 4; ++d) {
                        if (lambda.rows() > d || mu.rows() > d) continue;
                        PartitionFamily fam({lambda, mu}, d);
                        CHECK(pair_universal(lambda, mu, d).universal() ==
                              family_universal_by_scan(fam).universal());
                    }
                }
            }
        }
    }
}

TEST_CASE("minimal families at d = 2") {
    MinimalFamilySet set = minimal_universal_families(2);
    REQUIRE(set.families.size() == 3);
    CHECK(set.families[0] ==
          std::vector<Partition>{Partition{2, 1}, Partition{2, 1}});
    CHECK(set.families[1] ==
          std::vector<Partition>{Partition{2, 1}, Partition{2, 2}});
    CHECK(set.families[2] ==
          std::vector<Partition>{Partition{2, 2}, Partition{2, 2}});
}

TEST_CASE("minimal families are minimal and universal") {
    for (int d = 2; d <= 3; ++d) {
        MinimalFamilySet set = minimal_universal_families(d);
        for (const auto& members : set.families) {
            CHECK(family_universal(PartitionFamily(members, d)).universal());
            if (members.size() > 2) {
                for (size_t skip = 0; skip < members.size(); ++skip) {
                    std::vector<Partition> sub;
                    for (size_t i = 0; i < members.size(); ++i)
                        if (i != skip) sub.push_back(members[i]);
                    CHECK_FALSE(
                        family_universal(PartitionFamily(sub, d)).universal());
                }
            }
        }
    }
}

TEST_CASE("ancilla suggestions") {
    CHECK(ancilla_suggestion(
              PartitionFamily({Partition{2, 1}, Partition{2, 1}}, 3)) ==
          Partition{2, 2});
    // A self-conjugate proper family takes the two-cell fix.
    CHECK(ancilla_suggestion(PartitionFamily(
              {Partition{3, 2, 1}, Partition{3, 2, 1}}, 3)) == Partition{2});
    // Non-self-conjugate all-hook family.
    CHECK(ancilla_suggestion(
              PartitionFamily({Partition{3, 1}, Partition{3, 1}}, 4)) ==
          Partition{2, 2});
    // The five-cell fix always verifies, here after the square fails at d=4.
    CHECK(ancilla_suggestion(
              PartitionFamily({Partition{2, 1}, Partition{2, 1}}, 4)) ==
          Partition{3, 2});
    // Every suggestion leaves the extended family universal.
    for (const auto& members : std::vector<std::vector<Partition>>{
             {Partition{2, 2, 1}},
             {Partition{3, 1}, Partition{4, 1}},
             {Partition{3, 2, 1}, Partition{3, 2, 1}},
             {Partition{2, 1}, Partition{2, 1}, Partition{2, 1}}}) {
        for (int d = 3; d <= 4; ++d) {
            PartitionFamily fam(members, d);
            Partition extra = ancilla_suggestion(fam);
            std::vector<Partition> extended = members;
            extended.push_back(extra);
            CHECK(family_universal(PartitionFamily(extended, d)).universal());
        }
    }
}

TEST_CASE("highest-weight targets") {
    auto [nu, verdict] = cartan_target(
        PartitionFamily({Partition{2, 1}, Partition{2, 1}}, 3));
    CHECK(nu == Partition{4, 2});
    CHECK(verdict.universal());

    auto [nu2, verdict2] = cartan_target(
        PartitionFamily({Partition{2, 2}, Partition{2, 2}}, 2));
    CHECK(nu2 == Partition{4, 4});
    CHECK(verdict2.universal());

    CHECK_THROWS_AS(
        cartan_target(PartitionFamily({Partition{1}, Partition{2, 1}}, 2)),
        TrivialPartition);
    CHECK_THROWS_AS(cartan_target(PartitionFamily({Partition{2, 2}}, 2)),
                    SingleMember);
}

TEST_CASE("upward closure spot checks") {
    CHECK(upward_closed_check(PartitionFamily({Partition{2, 2}, Partition{2, 2},
                                               Partition{2, 1}},
                                              3))
              .passed);
    CHECK(upward_closed_check(PartitionFamily({Partition{2, 1}, Partition{2, 1},
                                               Partition{5, 1}},
                                              2))
              .passed);
}
