#include <doctest.h>

#include <functional>
#include <random>

#include "exou/lr.hpp"
#include "exou/tableau.hpp"

using namespace exou;

namespace {

// Naive oracle: generates every filling of the skew cells with entries in
// 1..rows(mu) and checks the semistandard, weight, and lattice conditions
// after the fact. Independent of the production backtracker.
std::uint64_t naive_lr(const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= nu.rows(); ++r)
        for (int c = lambda.part(r) + 1; c <= nu.part(r); ++c)
            cells.push_back({r, c});
    int m = static_cast<int>(cells.size());
    int maxv = std::max(1, mu.rows());
    std::vector<int> fill(m, 1);
    std::uint64_t count = 0;
    auto valid = [&]() {
        std::map<std::pair<int, int>, int> grid;
        for (int i = 0; i < m; ++i) grid[{cells[i].row, cells[i].col}] = fill[i];
        for (int i = 0; i < m; ++i) {
            auto [r, c] = cells[i];
            auto right = grid.find({r, c + 1});
            if (right != grid.end() && fill[i] > right->second) return false;
            auto below = grid.find({r + 1, c});
            if (below != grid.end() && fill[i] >= below->second) return false;
        }
        std::vector<int> weight(maxv + 1, 0);
        for (int v : fill) ++weight[v];
        for (int v = 1; v <= maxv; ++v)
            if (weight[v] != mu.part(v)) return false;
        // Reverse reading word: rows top to bottom, right to left.
        std::vector<int> word;
        for (int r = 1; r <= nu.rows(); ++r)
            for (int c = nu.part(r); c >= lambda.part(r) + 1; --c)
                word.push_back(grid[{r, c}]);
        std::vector<int> seen(maxv + 2, 0);
        for (int v : word) {
            ++seen[v];
            if (v > 1 && seen[v] > seen[v - 1]) return false;
        }
        return true;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            if (valid()) ++count;
            return;
        }
        for (int v = 1; v <= maxv; ++v) {
            fill[i] = v;
            rec(i + 1);
        }
    };
    if (m == 0) return mu.empty() ? 1 : 0;
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("coefficient examples") {
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1},
                         Partition{4, 1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1},
                         Partition{3, 1, 1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1},
                         Partition{3, 2, 1}) == 2);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2}, Partition{3, 2, 1}) ==
          0);  // size mismatch
}

TEST_CASE("coefficients match the naive oracle, totals <= 8") {
    for (int total = 2; total <= 8; ++total) {
        for (int l = 1; l < total; ++l) {
            for (const Partition& lambda : partitions_of(l)) {
                for (const Partition& mu : partitions_of(total - l)) {
                    for (const Partition& nu : partitions_of(total)) {
                        CHECK(lr_coefficient(lambda, mu, nu) ==
                              naive_lr(lambda, mu, nu));
                    }
                }
            }
        }
    }
}

TEST_CASE("expansion of [2,1] x [2,1]") {
    LrExpansion e = lr_expand(Partition{2, 1}, Partition{2, 1});
    LrExpansion expected{
        {Partition{4, 2}, 1},       {Partition{4, 1, 1}, 1},
        {Partition{3, 3}, 1},       {Partition{3, 2, 1}, 2},
        {Partition{3, 1, 1, 1}, 1}, {Partition{2, 2, 2}, 1},
        {Partition{2, 2, 1, 1}, 1},
    };
    CHECK(e == expected);
}

TEST_CASE("expansion identities") {
    CHECK(lr_expand(Partition{3, 1}, Partition{}) ==
          LrExpansion{{Partition{3, 1}, 1}});
    CHECK(lr_expand(Partition{1}, Partition{1}) ==
          LrExpansion{{Partition{2}, 1}, {Partition{1, 1}, 1}});
}

TEST_CASE("expansion carries the induced dimension") {
    auto binom = [](int n, int k) {
        std::uint64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (const auto& [lambda, mu] :
         std::vector<std::pair<Partition, Partition>>{
             {Partition{2, 1}, Partition{2, 1}},
             {Partition{3, 2}, Partition{2, 2}},
             {Partition{2, 2, 1}, Partition{3, 1}},
             {Partition{4, 1}, Partition{3, 2, 1}}}) {
        std::uint64_t total = 0;
        for (const auto& [nu, c] : lr_expand(lambda, mu))
            total += c * dimension(nu);
        CHECK(total == dimension(lambda) * dimension(mu) *
                           binom(lambda.size() + mu.size(), lambda.size()));
    }
}

TEST_CASE("iterated coefficients") {
    CHECK(multi_lr_coefficient({Partition{2, 1}, Partition{2, 1}},
                               Partition{4, 2}) == 1);
    CHECK(multi_lr_coefficient({Partition{1}, Partition{1}, Partition{1}},
                               Partition{2, 1}) == 2);
    CHECK(multi_lr_coefficient({Partition{3, 1}}, Partition{3, 1}) == 1);
}

TEST_CASE("iterated coefficients are order-independent") {
    std::vector<Partition> members{Partition{2, 1}, Partition{3, 2},
                                   Partition{1, 1}};
    std::vector<Partition> reordered{Partition{3, 2}, Partition{1, 1},
                                     Partition{2, 1}};
    for (const Partition& nu : partitions_of(10)) {
        CHECK(multi_lr_coefficient(members, nu) ==
              multi_lr_coefficient(reordered, nu));
    }
}

TEST_CASE("product sets") {
    LRProductSet set =
        product_set(PartitionFamily({Partition{2, 1}, Partition{2, 1}}, 3));
    std::vector<Partition> expected{Partition{4, 2}, Partition{4, 1, 1},
                                    Partition{3, 3}, Partition{3, 2, 1},
                                    Partition{2, 2, 2}};
    CHECK(set.coefficients.size() == expected.size());
    for (const Partition& nu : expected) CHECK(set.contains(nu));

    LRProductSet triple = product_set(PartitionFamily(
        {Partition{2, 1}, Partition{2, 1}, Partition{2, 1}}, 3));
    CHECK(triple.contains(Partition{3, 3, 3}));

    LRProductSet single =
        product_set(PartitionFamily({Partition{3, 2}}, 4));
    CHECK(single.coefficients.size() == 1);
    CHECK(single.contains(Partition{3, 2}));
}

TEST_CASE("pruned product set matches the unpruned route") {
    for (const auto& members : std::vector<std::vector<Partition>>{
             {Partition{2, 1}, Partition{2, 1}, Partition{2, 1}},
             {Partition{2, 2}, Partition{2, 1}, Partition{2, 1}},
             {Partition{3, 1}, Partition{2, 1, 1}},
             {Partition{2, 2}, Partition{2, 2}, Partition{3, 1, 1}}}) {
        for (int d = 3; d <= 4; ++d) {
            PartitionFamily fam(members, d);
            CHECK(product_set(fam, 30, true).coefficients ==
                  product_set(fam, 30, false).coefficients);
        }
    }
}

TEST_CASE("per-index bounds") {
    auto bounds = weyl_bounds(Partition{2, 2}, Partition{2, 2}, 3);
    CHECK(bounds[0] == std::pair<int, int>{4, 4});
    // Every three-row label in the product indeed starts with 4.
    for (const auto& [nu, c] : lr_expand(Partition{2, 2}, Partition{2, 2})) {
        if (nu.rows() <= 3) CHECK(nu.part(1) == 4);
    }

    CHECK(weyl_bounds(Partition{1}, Partition{1}, 2)[0] ==
          std::pair<int, int>{1, 2});

    auto degenerate = weyl_bounds(Partition{3, 1}, Partition{}, 2);
    CHECK(degenerate[0] == std::pair<int, int>{3, 3});
    CHECK(degenerate[1] == std::pair<int, int>{1, 1});
}

TEST_CASE("conjugate-free criterion for self-conjugate pairs") {
    CHECK(no_conjugates_pair(Partition{2, 2}, Partition{2, 2}, 3));
    CHECK_FALSE(no_conjugates_pair(Partition{2, 2}, Partition{2, 2}, 4));
    CHECK_FALSE(no_conjugates_pair(Partition{2, 1}, Partition{2, 1}, 3));
    CHECK_THROWS_AS(no_conjugates_pair(Partition{3, 1}, Partition{2, 1}, 3),
                    HypothesisViolated);
}

TEST_CASE("conjugate-free criterion matches scanning, self-conjugate pairs") {
    std::vector<Partition> pool;
    for (int n = 3; n <= 6; ++n)
        for (const Partition& p : partitions_of(n))
            if (p.is_self_conjugate()) pool.push_back(p);
    for (const Partition& lambda : pool) {
        for (const Partition& mu : pool) {
            for (int d = std::max(lambda.rows(), mu.rows()); d <= 4; ++d) {
                LRProductSet set =
                    product_set(PartitionFamily({lambda, mu}, d));
                bool scan_free = true;
                for (const auto& [nu, c] : set.coefficients) {
                    if (nu.is_self_conjugate() || set.contains(nu.conjugate()))
                        scan_free = false;
                }
                CHECK(no_conjugates_pair(lambda, mu, d) == scan_free);
            }
        }
    }
}

TEST_CASE("diagonal construction witnesses the conjugate pair") {
    // When the exclusion margin fails, sorting lambda_i + mu_{d+1-i} gives a
    // label that keeps both itself and its conjugate in the product set.
    for (const auto& [lambda, mu, d] :
         std::vector<std::tuple<Partition, Partition, int>>{
             {Partition{2, 2}, Partition{2, 2}, 4},
             {Partition{2, 1}, Partition{2, 1}, 3},
             {Partition{3, 2, 1}, Partition{2, 1}, 4}}) {
        REQUIRE(conjugate_exclusion_margin(lambda, mu, d) <= d);
        std::vector<int> parts;
        for (int i = 1; i <= d; ++i)
            parts.push_back(lambda.part(i) + mu.part(d + 1 - i));
        Partition nu = Partition::sorted(parts);
        CHECK(lr_coefficient(lambda, mu, nu) > 0);
        CHECK(nu.rows() <= d);
        CHECK(lr_coefficient(lambda, mu, nu.conjugate()) > 0);
        CHECK(nu.conjugate().rows() <= d);
    }
}

TEST_CASE("symmetries, support bound, and sum rule, totals <= 10") {
    std::mt19937_64 rng(0x5eed);
    for (int total = 2; total <= 10; ++total) {
        for (int l = 1; l < total; ++l) {
            for (const Partition& lambda : partitions_of(l)) {
                for (const Partition& mu : partitions_of(total - l)) {
                    CHECK(lr_coefficient(lambda, mu,
                                         partwise_sum(lambda, mu)) == 1);
                    for (const Partition& nu : partitions_of(total)) {
                        std::uint64_t c = lr_coefficient(lambda, mu, nu);
                        CHECK(c == lr_coefficient(mu, lambda, nu));
                        CHECK(c == lr_coefficient(lambda.conjugate(),
                                                  mu.conjugate(),
                                                  nu.conjugate()));
                        if (c > 0) {
                            for (int i = 1;
                                 i <= std::max(lambda.rows(), mu.rows()); ++i)
                                CHECK(nu.part(i) >= std::max(lambda.part(i),
                                                             mu.part(i)));
                        }
                    }
                }
            }
        }
    }
}
