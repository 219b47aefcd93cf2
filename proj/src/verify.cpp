#include "exou/verify.hpp"

#include <algorithm>
#include <random>

#include "exou/schur_weyl.hpp"

namespace exou {

namespace {

void merge(std::vector<CheckReport>& into, std::vector<CheckReport> from) {
    for (CheckReport& r : from) into.push_back(std::move(r));
}

}  // namespace

std::vector<CheckReport> representation_checks(const VerifyOptions& opt) {
    std::vector<CheckReport> out;
    for (int n = 1; n <= opt.max_n; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            merge(out, verify_structure(shape, opt.element_tol,
                                        opt.product_tol,
                                        std::max(opt.max_n, 20)));
        }
    }
    return out;
}

std::vector<CheckReport> coefficient_checks(const VerifyOptions& opt) {
    std::vector<CheckReport> out;

    double symmetry_bad = 0.0, support_bad = 0.0, weyl_bad = 0.0;
    for (int n = 2; n <= opt.lr_max_total; ++n) {
        std::vector<Partition> nus = partitions_of(n);
        for (int l = 1; l < n; ++l) {
            for (const Partition& lambda : partitions_of(l)) {
                for (const Partition& mu : partitions_of(n - l)) {
                    for (const Partition& nu : nus) {
                        std::uint64_t c = lr_coefficient(lambda, mu, nu);
                        if (c != lr_coefficient(mu, lambda, nu))
                            symmetry_bad += 1.0;
                        if (c != lr_coefficient(lambda.conjugate(),
                                                mu.conjugate(),
                                                nu.conjugate()))
                            symmetry_bad += 1.0;
                        if (c > 0) {
                            int rows = std::max(lambda.rows(), mu.rows());
                            for (int i = 1; i <= rows; ++i) {
                                if (nu.part(i) <
                                    std::max(lambda.part(i), mu.part(i)))
                                    support_bad += 1.0;
                            }
                            int d = nu.rows();
                            auto bounds = weyl_bounds(lambda, mu, d);
                            for (int k = 1; k <= d; ++k) {
                                if (nu.part(k) < bounds[k - 1].first ||
                                    nu.part(k) > bounds[k - 1].second)
                                    weyl_bad += 1.0;
                            }
                        }
                    }
                }
            }
        }
    }
    out.push_back(make_report("coefficient symmetries", symmetry_bad, 0.0));
    out.push_back(make_report("coefficient support bound", support_bad, 0.0));
    out.push_back(make_report("per-index bounds soundness", weyl_bad, 0.0));

    std::mt19937_64 rng(opt.seed);
    double cartan_bad = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        int l = 1 + static_cast<int>(rng() % 6);
        int m = 1 + static_cast<int>(rng() % 6);
        std::vector<Partition> ls = partitions_of(l);
        std::vector<Partition> ms = partitions_of(m);
        const Partition& lambda = ls[rng() % ls.size()];
        const Partition& mu = ms[rng() % ms.size()];
        if (lr_coefficient(lambda, mu, partwise_sum(lambda, mu)) != 1)
            cartan_bad += 1.0;
    }
    out.push_back(make_report("part-wise-sum coefficient", cartan_bad, 0.0));

    return out;
}

std::vector<CheckReport> decision_checks(const VerifyOptions& opt) {
    std::vector<CheckReport> out;

    double pair_bad = 0.0, hook_bad = 0.0, conj_bad = 0.0;
    for (int total = 6; total <= opt.cross_max_total; ++total) {
        for (int l = 3; l <= total - 3; ++l) {
            for (const Partition& lambda : partitions_of(l)) {
                if (lambda.is_trivial()) continue;
                for (const Partition& mu : partitions_of(total - l)) {
                    if (mu.is_trivial()) continue;
                    for (int d = 3; d <= 4; ++d) {
                        if (lambda.rows() > d || mu.rows() > d) continue;
                        PartitionFamily family({lambda, mu}, d);
                        bool arithmetic =
                            pair_universal(lambda, mu, d).universal();
                        bool scanned =
                            family_universal_by_scan(family).universal();
                        if (arithmetic != scanned) pair_bad += 1.0;

                        LRProductSet set = product_set(family);
                        bool scan_has_hook = std::any_of(
                            set.coefficients.begin(), set.coefficients.end(),
                            [](const auto& e) { return e.first.is_hook(); });
                        bool arith_has_hook =
                            lambda.part(2) == 1 && mu.part(2) == 1 &&
                            lambda.rows() + mu.rows() < 2 + d;
                        if (scan_has_hook != arith_has_hook) hook_bad += 1.0;

                        if (lambda.is_self_conjugate() &&
                            mu.is_self_conjugate()) {
                            bool arith_free =
                                no_conjugates_pair(lambda, mu, d);
                            bool scan_free = true;
                            for (const auto& [nu, c] : set.coefficients) {
                                if (nu.is_self_conjugate() ||
                                    set.contains(nu.conjugate()))
                                    scan_free = false;
                            }
                            if (arith_free != scan_free) conj_bad += 1.0;
                        }
                    }
                }
            }
        }
    }
    out.push_back(
        make_report("pair criteria against product scan", pair_bad, 0.0));
    out.push_back(make_report("hook exclusion arithmetic", hook_bad, 0.0));
    out.push_back(
        make_report("conjugate exclusion arithmetic", conj_bad, 0.0));
    return out;
}

std::vector<CheckReport> counting_checks(const VerifyOptions& opt) {
    std::vector<CheckReport> out;

    double count_bad = 0.0;
    for (int n = 1; n <= std::min(opt.max_n, 10); ++n) {
        for (const Partition& shape : partitions_of(n)) {
            if (dimension(shape) !=
                enumerate_standard(shape, 20).size())
                count_bad += 1.0;
        }
    }
    out.push_back(
        make_report("hook-length formula vs enumeration", count_bad, 0.0));

    double schur_bad = 0.0;
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= std::min(opt.max_n, 8); ++n) {
            std::uint64_t total = 0;
            for (const Partition& shape : partitions_of(n, d))
                total += dimension(shape) * weyl_dimension(shape, d);
            std::uint64_t expect = 1;
            for (int i = 0; i < n; ++i) expect *= d;
            if (total != expect) schur_bad += 1.0;
        }
    }
    out.push_back(make_report("duality dimension identity", schur_bad, 0.0));

    double roundtrip_bad = 0.0;
    for (int n = 1; n <= std::min(opt.max_n, 8); ++n) {
        for (const Partition& shape : partitions_of(n)) {
            for (const StandardTableau& t : enumerate_standard(shape, 20)) {
                if (!(tableau_from_content_vector(content_vector(t)) == t))
                    roundtrip_bad += 1.0;
            }
        }
    }
    out.push_back(
        make_report("content vector round trip", roundtrip_bad, 0.0));

    for (const Partition& shape :
         {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}}) {
        PhysicalBasisMap map = physical_basis_map(shape);
        out.push_back(make_report(
            "physical map orthonormality " + shape.to_string(),
            orthonormality_residual(map), opt.element_tol));
        out.push_back(make_report(
            "physical map equivariance " + shape.to_string(),
            equivariance_residual(map), opt.element_tol));
        out.push_back(make_report("physical map weights " + shape.to_string(),
                                  weight_residual(map), 1e-12));
        out.push_back(collective_noise_check(map, opt.element_tol));
    }
    return out;
}

std::vector<CheckReport> run_all_checks(const VerifyOptions& opt) {
    std::vector<CheckReport> out;
    merge(out, representation_checks(opt));
    merge(out, coefficient_checks(opt));
    merge(out, decision_checks(opt));
    merge(out, counting_checks(opt));
    std::sort(out.begin(), out.end(),
              [](const CheckReport& a, const CheckReport& b) {
                  return a.name < b.name;
              });
    return out;
}

}  // namespace exou
