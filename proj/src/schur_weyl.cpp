#include "exou/schur_weyl.hpp"

#include <algorithm>
#include <cmath>

namespace exou {

double coding_efficiency(int d, const Partition& lambda) {
    if (lambda.empty()) throw TrivialPartition("empty partition");
    if (d < 2) throw HypothesisViolated("need d >= 2");
    double dim = static_cast<double>(dimension(lambda));
    return std::log(dim) / std::log(static_cast<double>(d)) / lambda.size();
}

std::vector<EfficiencyRow> efficiency_table(int n_min, int n_max,
                                            const std::vector<int>& d_list) {
    if (n_max > 20) throw SizeLimit("rows limited to n <= 20");
    std::vector<EfficiencyRow> out;
    for (int n = n_min; n <= n_max; ++n) {
        for (int d : d_list) {
            EfficiencyRow row;
            row.n = n;
            row.d = d;
            bool have = false;
            for (const Partition& p : partitions_of(n, d)) {
                if (!single_universal(p).universal()) continue;
                std::uint64_t dim = dimension(p);
                auto key = std::make_tuple(dim, p.part(2), p.parts());
                auto best = std::make_tuple(row.dim,
                                            row.best_partition.part(2),
                                            row.best_partition.parts());
                if (!have || key > best) {
                    row.best_partition = p;
                    row.dim = dim;
                    have = true;
                }
            }
            if (!have) continue;
            row.efficiency = coding_efficiency(d, row.best_partition);
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::uint64_t isotypic_dimension(const PartitionFamily& family,
                                 const Partition& nu) {
    if (nu.size() != family.total_size())
        throw HypothesisViolated("label size must match the family total");
    std::uint64_t dims = 1;
    for (const Partition& m : family.members()) dims *= dimension(m);
    return dims * multi_lr_coefficient(family.members(), nu);
}

int PhysicalBasisMap::weight_index(int twice_m) const {
    for (size_t w = 0; w < twice_weights.size(); ++w)
        if (twice_weights[w] == twice_m) return static_cast<int>(w);
    throw IndexOutOfRange("weight 2m = " + std::to_string(twice_m) +
                          " not present");
}

Eigen::VectorXd PhysicalBasisMap::vector(int tableau_index,
                                         int twice_m) const {
    return vectors[weight_index(twice_m)].col(tableau_index);
}

namespace {

// Basis of the S_z = m sector: computational states with a fixed number of
// set bits. Bit k of the state corresponds to system k+1.
std::vector<std::uint32_t> weight_sector(int n, int ones) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (__builtin_popcount(s) == ones) out.push_back(s);
    return out;
}

std::uint32_t swap_bits(std::uint32_t s, int a, int b) {
    std::uint32_t x = ((s >> a) ^ (s >> b)) & 1u;
    return s ^ ((x << a) | (x << b));
}

// Matrix of the transposition sum X_k = sum_{i<k} (i k) on the sector.
Eigen::MatrixXd sector_transposition_sum(
    const std::vector<std::uint32_t>& sector,
    const std::map<std::uint32_t, int>& index, int k) {
    int dim = static_cast<int>(sector.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        for (int i = 1; i < k; ++i) {
            std::uint32_t image = swap_bits(sector[col], i - 1, k - 1);
            m(index.at(image), col) += 1.0;
        }
    }
    return m;
}

Eigen::VectorXd apply_swap(const Eigen::VectorXd& v, int n, int i) {
    Eigen::VectorXd out(v.size());
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(v.size()); ++s)
        out(swap_bits(s, i - 1, i)) = v(s);
    return out;
}

}  // namespace

PhysicalBasisMap physical_basis_map(const Partition& shape, int max_n) {
    int n = shape.size();
    if (shape.rows() > 2)
        throw RowBound("physical maps are built for shapes of at most two "
                       "rows");
    if (n < 1 || n > max_n)
        throw SizeLimit("shape size " + std::to_string(n) +
                        " outside 1.." + std::to_string(max_n));

    PhysicalBasisMap map;
    map.shape = shape;
    map.n = n;
    map.basis = enumerate_standard(shape, max_n);
    int dim = static_cast<int>(map.basis.size());
    int twice_spin = shape.part(1) - shape.part(2);

    // Highest-weight vector of the first tableau: inside the sector with
    // lambda_2 set bits, cut down to the joint transposition-sum eigenspace
    // whose eigenvalues are the tableau contents.
    std::vector<std::uint32_t> sector = weight_sector(n, shape.part(2));
    std::map<std::uint32_t, int> index;
    for (size_t i = 0; i < sector.size(); ++i)
        index[sector[i]] = static_cast<int>(i);

    const StandardTableau& first = map.basis[0];
    Eigen::MatrixXd subspace = Eigen::MatrixXd::Identity(
        static_cast<int>(sector.size()), static_cast<int>(sector.size()));
    for (int k = 2; k <= n; ++k) {
        Eigen::MatrixXd xk = sector_transposition_sum(sector, index, k);
        Eigen::MatrixXd restricted =
            subspace.transpose() * xk * subspace;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(restricted);
        int target = first.content(k);
        std::vector<int> keep;
        for (int e = 0; e < solver.eigenvalues().size(); ++e)
            if (std::abs(solver.eigenvalues()(e) - target) < 0.5)
                keep.push_back(e);
        if (keep.empty())
            throw Degenerate("no eigenvector with the required content");
        Eigen::MatrixXd next(subspace.rows(),
                             static_cast<int>(keep.size()));
        for (size_t c = 0; c < keep.size(); ++c)
            next.col(static_cast<int>(c)) =
                subspace * solver.eigenvectors().col(keep[c]);
        subspace = std::move(next);
    }
    if (subspace.cols() != 1)
        throw Degenerate("solution space dimension " +
                         std::to_string(subspace.cols()) + ", expected 1");

    Eigen::VectorXd seed = Eigen::VectorXd::Zero(1 << n);
    for (size_t i = 0; i < sector.size(); ++i)
        seed(sector[i]) = subspace(static_cast<int>(i), 0);
    seed.normalize();
    // Phase convention: the lexicographically smallest ket with a nonzero
    // coefficient in the first tableau's vector carries a positive one.
    std::string best_ket;
    std::uint32_t best_state = 0;
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(seed.size());
         ++s) {
        if (std::abs(seed(s)) <= 1e-8) continue;
        std::string ket = format_ket(s, n);
        if (best_ket.empty() || ket < best_ket) {
            best_ket = ket;
            best_state = s;
        }
    }
    if (best_ket.empty()) throw Degenerate("zero highest-weight vector");
    if (seed(best_state) < 0) seed = -seed;

    // Propagate to the other tableaux along adjacent swaps.
    Eigen::MatrixXd top(1 << n, dim);
    std::vector<bool> known(dim, false);
    top.col(0) = seed;
    known[0] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int t = 0; t < dim; ++t) {
            if (!known[t]) continue;
            const StandardTableau& tab = map.basis[t];
            for (int i = 1; i < n; ++i) {
                if (tab.adjacent_in_line(i)) continue;
                int target = canonical_index(map.basis, tab.swapped(i));
                if (known[target]) continue;
                double dist = axial_distance(tab, i, i + 1);
                Eigen::VectorXd moved = apply_swap(top.col(t), n, i);
                top.col(target) =
                    (moved - top.col(t) / dist) /
                    std::sqrt(1.0 - 1.0 / (dist * dist));
                known[target] = true;
                progress = true;
            }
        }
    }
    for (int t = 0; t < dim; ++t)
        if (!known[t]) throw Degenerate("tableau graph not connected");

    // Weights +2S, +2S-2, ..., -2S. Nonnegative weights by the collective
    // lowering operator; negative weights by the global bit flip, which is
    // the convention that matches the worked two-state examples.
    for (int tm = twice_spin; tm >= -twice_spin; tm -= 2)
        map.twice_weights.push_back(tm);
    map.vectors.assign(map.twice_weights.size(), Eigen::MatrixXd());
    map.vectors[0] = top;
    for (size_t w = 1; w < map.twice_weights.size(); ++w) {
        int tm = map.twice_weights[w];
        if (tm >= 0) {
            const Eigen::MatrixXd& prev = map.vectors[w - 1];
            Eigen::MatrixXd lowered(1 << n, dim);
            for (int t = 0; t < dim; ++t) {
                Eigen::VectorXd v = Eigen::VectorXd::Zero(1 << n);
                for (std::uint32_t s = 0;
                     s < static_cast<std::uint32_t>(1 << n); ++s) {
                    if (prev(s, t) == 0.0) continue;
                    for (int b = 0; b < n; ++b) {
                        if (s & (1u << b)) continue;
                        v(s | (1u << b)) += prev(s, t);
                    }
                }
                double norm = v.norm();
                if (norm < 1e-12)
                    throw Degenerate("lowering annihilated a vector");
                lowered.col(t) = v / norm;
            }
            map.vectors[w] = std::move(lowered);
        } else {
            const Eigen::MatrixXd& mirror =
                map.vectors[map.weight_index(-tm)];
            Eigen::MatrixXd flipped(1 << n, dim);
            std::uint32_t all = (1u << n) - 1;
            for (int t = 0; t < dim; ++t)
                for (std::uint32_t s = 0;
                     s < static_cast<std::uint32_t>(1 << n); ++s)
                    flipped(s ^ all, t) = mirror(s, t);
            map.vectors[w] = std::move(flipped);
        }
    }
    return map;
}

CheckReport collective_noise_check(const PhysicalBasisMap& map, double tol) {
    double worst = 0.0;
    std::uint32_t all = (1u << map.n) - 1;
    int dim = static_cast<int>(map.basis.size());
    for (size_t w = 0; w < map.twice_weights.size(); ++w) {
        int mirrored = map.weight_index(-map.twice_weights[w]);
        double sign = 0.0;
        for (int t = 0; t < dim; ++t) {
            Eigen::VectorXd flipped(map.vectors[w].rows());
            for (std::uint32_t s = 0;
                 s < static_cast<std::uint32_t>(flipped.size()); ++s)
                flipped(s ^ all) = map.vectors[w](s, t);
            double overlap = flipped.dot(map.vectors[mirrored].col(t));
            if (t == 0) sign = overlap >= 0 ? 1.0 : -1.0;
            worst = std::max(
                worst,
                (flipped - sign * map.vectors[mirrored].col(t)).norm());
        }
    }
    return make_report("collective flip on " + map.shape.to_string(), worst,
                       tol);
}

double orthonormality_residual(const PhysicalBasisMap& map) {
    double worst = 0.0;
    for (const Eigen::MatrixXd& v : map.vectors) {
        Eigen::MatrixXd gram = v.transpose() * v;
        worst = std::max(
            worst,
            (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                .cwiseAbs()
                .maxCoeff());
    }
    return worst;
}

double equivariance_residual(const PhysicalBasisMap& map) {
    double worst = 0.0;
    int dim = static_cast<int>(map.basis.size());
    for (int i = 1; i < map.n; ++i) {
        Eigen::MatrixXd rho = adjacent_matrix(map.shape, i).mat;
        for (const Eigen::MatrixXd& v : map.vectors) {
            for (int t = 0; t < dim; ++t) {
                Eigen::VectorXd lhs = apply_swap(v.col(t), map.n, i);
                Eigen::VectorXd rhs = Eigen::VectorXd::Zero(lhs.size());
                for (int s = 0; s < dim; ++s)
                    if (rho(s, t) != 0.0) rhs += rho(s, t) * v.col(s);
                worst = std::max(worst, (lhs - rhs).norm());
            }
        }
    }
    return worst;
}

double weight_residual(const PhysicalBasisMap& map) {
    double worst = 0.0;
    for (size_t w = 0; w < map.twice_weights.size(); ++w) {
        double m = map.twice_weights[w] / 2.0;
        for (int t = 0; t < static_cast<int>(map.basis.size()); ++t) {
            for (std::uint32_t s = 0;
                 s < static_cast<std::uint32_t>(1 << map.n); ++s) {
                double coeff = map.vectors[w](s, t);
                if (coeff == 0.0) continue;
                double sz =
                    (map.n - 2.0 * __builtin_popcount(s)) / 2.0;
                worst = std::max(worst, std::abs((sz - m) * coeff));
            }
        }
    }
    return worst;
}

std::string format_ket(std::uint32_t state, int n) {
    std::string out(n, '0');
    for (int b = 0; b < n; ++b)
        if (state & (1u << b)) out[b] = '1';
    return out;
}

}  // namespace exou
