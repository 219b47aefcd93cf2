#include <doctest.h>

#include <cmath>
#include <map>

#include "exou/schur_weyl.hpp"

using namespace exou;

namespace {

Eigen::VectorXd ket_vector(int n,
                           const std::map<std::string, double>& coeffs) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(1 << n);
    for (const auto& [ket, c] : coeffs) {
        std::uint32_t s = 0;
        for (int b = 0; b < n; ++b)
            if (ket[b] == '1') s |= 1u << b;
        v(s) = c;
    }
    return v;
}

double vec_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("coding efficiency") {
    CHECK(coding_efficiency(2, Partition{2, 1}) ==
          doctest::Approx(1.0 / 3.0));
    CHECK(coding_efficiency(3, Partition{4, 2, 1}) ==
          doctest::Approx(std::log(35.0) / std::log(3.0) / 7.0));
    CHECK(coding_efficiency(5, Partition{6}) == doctest::Approx(0.0));
}

TEST_CASE("efficiency table picks the published encodings") {
    struct Cell {
        int n, d;
        Partition partition;
        std::uint64_t dim;
        double efficiency;
    };
    std::vector<Cell> cells{
        {7, 2, Partition{4, 3}, 14, 0.54},
        {9, 4, Partition{4, 3, 1, 1}, 216, 0.43},
        {3, 2, Partition{2, 1}, 2, 0.33},
        {3, 3, Partition{2, 1}, 2, 0.21},
        {3, 4, Partition{2, 1}, 2, 0.17},
        {11, 3, Partition{5, 4, 2}, 990, 0.57},
        {13, 4, Partition{6, 4, 2, 1}, 17160, 0.54},
    };
    std::vector<EfficiencyRow> rows = efficiency_table(3, 13, {2, 3, 4});
    for (const Cell& cell : cells) {
        bool found = false;
        for (const EfficiencyRow& row : rows) {
            if (row.n != cell.n || row.d != cell.d) continue;
            found = true;
            CHECK(row.best_partition == cell.partition);
            CHECK(row.dim == cell.dim);
            CHECK(std::round(row.efficiency * 100) / 100 ==
                  doctest::Approx(cell.efficiency));
        }
        CHECK(found);
    }
}

TEST_CASE("isotypic dimensions") {
    PartitionFamily fam({Partition{2, 1}, Partition{2, 1}}, 3);
    CHECK(isotypic_dimension(fam, Partition{3, 2, 1}) == 8);
    CHECK(isotypic_dimension(fam, Partition{4, 2}) == 4);
    PartitionFamily single({Partition{3, 2}}, 2);
    CHECK(isotypic_dimension(single, Partition{3, 2}) ==
          dimension(Partition{3, 2}));
}

TEST_CASE("isotypic dimensions sum to the induced module") {
    auto multinomial = [](const std::vector<int>& sizes) {
        std::uint64_t result = 1;
        int total = 0;
        for (int s : sizes) {
            for (int i = 1; i <= s; ++i)
                result = result * (total + i) / i;
            total += s;
        }
        return result;
    };
    for (const auto& members : std::vector<std::vector<Partition>>{
             {Partition{2, 1}, Partition{2, 1}},
             {Partition{2, 2}, Partition{3, 1}},
             {Partition{2, 1}, Partition{2}, Partition{1, 1}}}) {
        PartitionFamily fam = PartitionFamily::with_default_bound(members);
        std::uint64_t total = 0;
        for (const Partition& nu : partitions_of(fam.total_size()))
            total += isotypic_dimension(fam, nu);
        std::uint64_t dims = 1;
        std::vector<int> sizes;
        for (const Partition& m : members) {
            dims *= dimension(m);
            sizes.push_back(m.size());
        }
        CHECK(total == dims * multinomial(sizes));
    }
}

TEST_CASE("three-system logical qubit") {
    PhysicalBasisMap map = physical_basis_map(Partition{2, 1});
    REQUIRE(map.basis.size() == 2);
    REQUIRE(map.twice_weights == std::vector<int>{1, -1});

    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double inv_sqrt6 = 1.0 / std::sqrt(6.0);

    CHECK(vec_distance(map.vector(0, 1),
                       ket_vector(3, {{"010", inv_sqrt2},
                                      {"100", -inv_sqrt2}})) < 1e-9);
    CHECK(vec_distance(map.vector(1, 1),
                       ket_vector(3, {{"001", 2 * inv_sqrt6},
                                      {"100", -inv_sqrt6},
                                      {"010", -inv_sqrt6}})) < 1e-9);
    CHECK(vec_distance(map.vector(0, -1),
                       ket_vector(3, {{"101", inv_sqrt2},
                                      {"011", -inv_sqrt2}})) < 1e-9);
    CHECK(vec_distance(map.vector(1, -1),
                       ket_vector(3, {{"110", 2 * inv_sqrt6},
                                      {"011", -inv_sqrt6},
                                      {"101", -inv_sqrt6}})) < 1e-9);
}

TEST_CASE("four-system logical qubit") {
    PhysicalBasisMap map = physical_basis_map(Partition{2, 2});
    REQUIRE(map.basis.size() == 2);
    REQUIRE(map.twice_weights == std::vector<int>{0});

    double inv_sqrt12 = 1.0 / std::sqrt(12.0);
    CHECK(vec_distance(map.vector(0, 0),
                       ket_vector(4, {{"0101", 0.5},
                                      {"0110", -0.5},
                                      {"1001", -0.5},
                                      {"1010", 0.5}})) < 1e-9);
    CHECK(vec_distance(map.vector(1, 0),
                       ket_vector(4, {{"0011", 2 * inv_sqrt12},
                                      {"1100", 2 * inv_sqrt12},
                                      {"0101", -inv_sqrt12},
                                      {"0110", -inv_sqrt12},
                                      {"1001", -inv_sqrt12},
                                      {"1010", -inv_sqrt12}})) < 1e-9);
}

TEST_CASE("four-system logical qutrit") {
    PhysicalBasisMap map = physical_basis_map(Partition{3, 1});
    REQUIRE(map.basis.size() == 3);
    REQUIRE(map.twice_weights == std::vector<int>{2, 0, -2});

    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    double inv_sqrt12 = 1.0 / std::sqrt(12.0);

    CHECK(vec_distance(map.vector(0, 2),
                       ket_vector(4, {{"0100", inv_sqrt2},
                                      {"1000", -inv_sqrt2}})) < 1e-9);
    CHECK(vec_distance(map.vector(1, 2),
                       ket_vector(4, {{"0010", 2 * inv_sqrt6},
                                      {"1000", -inv_sqrt6},
                                      {"0100", -inv_sqrt6}})) < 1e-9);
    CHECK(vec_distance(map.vector(2, 2),
                       ket_vector(4, {{"0001", 3 * inv_sqrt12},
                                      {"1000", -inv_sqrt12},
                                      {"0100", -inv_sqrt12},
                                      {"0010", -inv_sqrt12}})) < 1e-9);

    CHECK(vec_distance(map.vector(0, 0),
                       ket_vector(4, {{"0101", 0.5},
                                      {"0110", 0.5},
                                      {"1001", -0.5},
                                      {"1010", -0.5}})) < 1e-9);
    CHECK(vec_distance(map.vector(1, 0),
                       ket_vector(4, {{"0011", 2 * inv_sqrt12},
                                      {"1100", -2 * inv_sqrt12},
                                      {"0110", inv_sqrt12},
                                      {"1001", -inv_sqrt12},
                                      {"0101", -inv_sqrt12},
                                      {"1010", inv_sqrt12}})) < 1e-9);
    CHECK(vec_distance(map.vector(2, 0),
                       ket_vector(4, {{"0011", inv_sqrt6},
                                      {"1100", -inv_sqrt6},
                                      {"0101", inv_sqrt6},
                                      {"1010", -inv_sqrt6},
                                      {"0110", -inv_sqrt6},
                                      {"1001", inv_sqrt6}})) < 1e-9);

    CHECK(vec_distance(map.vector(0, -2),
                       ket_vector(4, {{"1011", inv_sqrt2},
                                      {"0111", -inv_sqrt2}})) < 1e-9);
    CHECK(vec_distance(map.vector(1, -2),
                       ket_vector(4, {{"1101", 2 * inv_sqrt6},
                                      {"0111", -inv_sqrt6},
                                      {"1011", -inv_sqrt6}})) < 1e-9);
    CHECK(vec_distance(map.vector(2, -2),
                       ket_vector(4, {{"1110", 3 * inv_sqrt12},
                                      {"0111", -inv_sqrt12},
                                      {"1011", -inv_sqrt12},
                                      {"1101", -inv_sqrt12}})) < 1e-9);
}

TEST_CASE("map residuals and the collective flip") {
    for (const Partition& shape :
         {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}, Partition{3, 2},
          Partition{4, 2}, Partition{5}}) {
        PhysicalBasisMap map = physical_basis_map(shape);
        CHECK(orthonormality_residual(map) < 1e-9);
        CHECK(equivariance_residual(map) < 1e-9);
        CHECK(weight_residual(map) < 1e-12);
        CHECK(collective_noise_check(map).passed);
    }
}

TEST_CASE("map guards") {
    CHECK_THROWS_AS(physical_basis_map(Partition{2, 1, 1}), RowBound);
    std::vector<int> parts{8, 3};
    CHECK_THROWS_AS(physical_basis_map(Partition(parts)), SizeLimit);
}

TEST_CASE("five-cell restriction splits into the four-cell labels") {
    // Dropping the largest entry maps the [3,2] tableaux onto the [2,2] and
    // [3,1] tableaux, and the generator matrices decompose into the same
    // blocks.
    std::vector<StandardTableau> big = enumerate_standard(Partition{3, 2});
    std::vector<StandardTableau> small22 = enumerate_standard(Partition{2, 2});
    std::vector<StandardTableau> small31 = enumerate_standard(Partition{3, 1});

    std::vector<int> block22, block31;
    for (size_t t = 0; t < big.size(); ++t) {
        std::vector<std::vector<int>> rows = big[t].rows();
        if (big[t].row_of(5) == 1) {
            rows[0].pop_back();
            CHECK(canonical_index(small22,
                                  StandardTableau(Partition{2, 2}, rows)) >=
                  0);
            block22.push_back(static_cast<int>(t));
        } else {
            rows[1].pop_back();
            CHECK(canonical_index(small31,
                                  StandardTableau(Partition{3, 1}, rows)) >=
                  0);
            block31.push_back(static_cast<int>(t));
        }
    }
    REQUIRE(block22.size() == 2);
    REQUIRE(block31.size() == 3);

    for (int i = 1; i <= 3; ++i) {
        Eigen::MatrixXd whole = adjacent_matrix(Partition{3, 2}, i).mat;
        Eigen::MatrixXd m22 = adjacent_matrix(Partition{2, 2}, i).mat;
        Eigen::MatrixXd m31 = adjacent_matrix(Partition{3, 1}, i).mat;
        for (int a : block22)
            for (int b : block31) {
                CHECK(whole(a, b) == doctest::Approx(0.0));
                CHECK(whole(b, a) == doctest::Approx(0.0));
            }
        for (size_t x = 0; x < block22.size(); ++x)
            for (size_t y = 0; y < block22.size(); ++y)
                CHECK(whole(block22[x], block22[y]) ==
                      doctest::Approx(m22(x, y)));
        for (size_t x = 0; x < block31.size(); ++x)
            for (size_t y = 0; y < block31.size(); ++y)
                CHECK(whole(block31[x], block31[y]) ==
                      doctest::Approx(m31(x, y)));
    }
}
