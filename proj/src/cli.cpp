#include "exou/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "exou/json_io.hpp"
#include "exou/verify.hpp"

namespace exou::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitRejected = 2;
constexpr int kExitNotUniversal = 3;

void validate(const CliConfig& cfg) {
    if (cfg.tolerance <= 0 || cfg.tolerance >= 1e-3)
        throw HypothesisViolated("tolerance must lie in (0, 1e-3)");
    if (cfg.enumeration_cap <= 0 || cfg.lr_cap <= 0 ||
        cfg.time_budget_ms <= 0)
        throw HypothesisViolated("caps and budgets must be positive");
}

EngineConfig engine_config(const CliConfig& cfg) {
    EngineConfig e;
    e.lr_total_cap = cfg.lr_cap;
    e.time_budget_ms = cfg.time_budget_ms;
    return e;
}

std::string family_text(const std::vector<Partition>& members) {
    std::string out;
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += ';';
        out += members[i].to_string();
    }
    return out;
}

void print_matrix(std::ostream& out, const RepMatrix& m, int precision) {
    out << std::fixed << std::setprecision(precision);
    for (int r = 0; r < m.mat.rows(); ++r) {
        for (int c = 0; c < m.mat.cols(); ++c) {
            if (c) out << ' ';
            out << std::setw(precision + 4) << m.mat(r, c);
        }
        out << '\n';
    }
    out.unsetf(std::ios::fixed);
    out << std::setprecision(6);
}

void print_verdict(std::ostream& out, const UniversalityVerdict& v,
                   bool json) {
    if (json) {
        out << to_json(v).dump(2) << '\n';
        return;
    }
    out << (v.universal() ? "universal" : "not universal") << " (d = " << v.d
        << ")\n";
    for (const RuleStep& s : v.rule_trace)
        out << "  [" << s.rule << "] " << s.reason << '\n';
    if (v.witness_partitions) {
        out << "  witnesses:";
        for (const Partition& p : *v.witness_partitions)
            out << ' ' << p.to_string();
        out << '\n';
    }
}

struct Command {
    CliConfig cfg;
    std::ostream& out;
    std::ostream& err;

    std::string partition_arg;
    std::string partition_arg2;
    std::string partition_arg3;
    std::string family_arg;
    std::string perm_arg;
    int d_arg = 0;
    int jm_arg = 0;
    bool intertwiner = false;
    int n_max = 13;
    std::string d_list = "2,3,4";
    int verify_max_n = 7;

    Partition partition(const std::string& text) const {
        return parse_partition(text, cfg.sort_parts);
    }

    PartitionFamily family(int default_rows_from_members = true) const {
        std::vector<Partition> members =
            parse_family_members(family_arg, cfg.sort_parts);
        if (members.empty())
            throw ParseError("family '" + family_arg + "' is empty");
        if (d_arg > 0) return PartitionFamily(members, d_arg);
        (void)default_rows_from_members;
        return PartitionFamily::with_default_bound(std::move(members));
    }
};

int cmd_dim(Command& c) {
    Partition p = c.partition(c.partition_arg);
    std::uint64_t dim = dimension(p);
    if (c.cfg.json)
        c.out << Json{{"partition", p.to_string()}, {"dim", dim}}.dump(2)
              << '\n';
    else
        c.out << dim << '\n';
    return kExitOk;
}

int cmd_conj(Command& c) {
    Partition p = c.partition(c.partition_arg).conjugate();
    if (c.cfg.json)
        c.out << to_json(p).dump(2) << '\n';
    else
        c.out << p.to_string() << '\n';
    return kExitOk;
}

int cmd_classify(Command& c) {
    Partition p = c.partition(c.partition_arg);
    PartitionClass cls = classify(p);
    if (c.cfg.json) {
        Json j = to_json(cls);
        j["partition"] = p.to_string();
        c.out << j.dump(2) << '\n';
    } else {
        c.out << p.to_string() << ": " << to_string(cls.kind)
              << (cls.self_conjugate ? ", self-conjugate" : "")
              << ", rows " << cls.rows << ", cols " << cls.cols
              << ", diagonal " << cls.diagonal_length << '\n';
    }
    return kExitOk;
}

int cmd_lr(Command& c) {
    Partition lambda = c.partition(c.partition_arg);
    Partition mu = c.partition(c.partition_arg2);
    if (!c.partition_arg3.empty()) {
        Partition nu = c.partition(c.partition_arg3);
        std::uint64_t coeff = lr_coefficient(lambda, mu, nu);
        if (c.cfg.json)
            c.out << Json{{"lambda", lambda.to_string()},
                          {"mu", mu.to_string()},
                          {"nu", nu.to_string()},
                          {"coefficient", coeff}}
                         .dump(2)
                  << '\n';
        else
            c.out << coeff << '\n';
        return kExitOk;
    }
    LrExpansion expansion = lr_expand(lambda, mu, c.cfg.lr_cap);
    if (c.cfg.json) {
        Json j = Json::object();
        for (const auto& [nu, coeff] : expansion)
            j[nu.to_string()] = coeff;
        c.out << Json{{"lambda", lambda.to_string()},
                      {"mu", mu.to_string()},
                      {"expansion", std::move(j)}}
                     .dump(2)
              << '\n';
    } else {
        for (const auto& [nu, coeff] : expansion)
            c.out << nu.to_string() << ": " << coeff << '\n';
    }
    return kExitOk;
}

int cmd_product_set(Command& c) {
    PartitionFamily fam = c.family();
    LRProductSet set = product_set(fam, c.cfg.lr_cap);
    if (c.cfg.json) {
        Json j = Json::object();
        for (const auto& [nu, coeff] : set.coefficients)
            j[nu.to_string()] = coeff;
        c.out << Json{{"family", family_text(set.family)},
                      {"d", set.d},
                      {"members", std::move(j)}}
                     .dump(2)
              << '\n';
    } else {
        for (const auto& [nu, coeff] : set.coefficients)
            c.out << nu.to_string() << ": " << coeff << '\n';
    }
    return kExitOk;
}

int cmd_universal(Command& c) {
    PartitionFamily fam = c.family();
    UniversalityVerdict v = family_universal(fam, engine_config(c.cfg));
    print_verdict(c.out, v, c.cfg.json);
    return v.universal() ? kExitOk : kExitNotUniversal;
}

int cmd_minimal_families(Command& c) {
    if (c.d_arg <= 0) throw ParseError("minimal-families requires --d");
    MinimalFamilySet set =
        minimal_universal_families(c.d_arg, engine_config(c.cfg));
    if (c.cfg.json) {
        Json fams = Json::array();
        for (const auto& members : set.families)
            fams.push_back(family_text(members));
        c.out << Json{{"d", set.d},
                      {"count", set.families.size()},
                      {"families", std::move(fams)}}
                     .dump(2)
              << '\n';
    } else {
        for (const auto& members : set.families)
            c.out << family_text(members) << '\n';
    }
    return kExitOk;
}

int cmd_efficiency_table(Command& c) {
    std::vector<int> ds;
    std::stringstream ss(c.d_list);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) ds.push_back(std::stoi(tok));
    if (ds.empty()) throw ParseError("empty --d list");
    std::vector<EfficiencyRow> rows = efficiency_table(3, c.n_max, ds);
    if (c.cfg.json) {
        Json j = Json::array();
        for (const EfficiencyRow& row : rows) j.push_back(to_json(row));
        c.out << Json{{"rows", std::move(j)}}.dump(2) << '\n';
    } else {
        c.out << std::setw(3) << "n" << std::setw(3) << "d" << "  "
              << std::setw(14) << std::left << "partition" << std::right
              << std::setw(8) << "D" << std::setw(7) << "E" << '\n';
        for (const EfficiencyRow& row : rows) {
            std::ostringstream e;
            e << std::fixed << std::setprecision(2) << row.efficiency;
            c.out << std::setw(3) << row.n << std::setw(3) << row.d << "  "
                  << std::setw(14) << std::left
                  << row.best_partition.to_string() << std::right
                  << std::setw(8) << row.dim << std::setw(7) << e.str()
                  << '\n';
        }
    }
    return kExitOk;
}

int cmd_repn(Command& c) {
    Partition p = c.partition(c.partition_arg);
    Json j{{"shape", p.to_string()}};
    if (!c.perm_arg.empty()) {
        Permutation s = Permutation::from_cycles(p.size(), c.perm_arg);
        RepMatrix m = permutation_matrix(p, s, c.cfg.enumeration_cap);
        if (c.cfg.json) {
            j["permutation"] = to_json(m);
            c.out << j.dump(2) << '\n';
        } else {
            c.out << "permutation " << s.to_string() << " on "
                  << p.to_string() << ":\n";
            print_matrix(c.out, m, c.cfg.precision);
        }
        return kExitOk;
    }
    if (c.jm_arg > 0) {
        RepMatrix m = jucys_murphy_matrix(p, c.jm_arg, c.cfg.enumeration_cap);
        if (c.cfg.json) {
            j["transposition_sum"] = to_json(m);
            c.out << j.dump(2) << '\n';
        } else {
            c.out << "transposition sum X_" << c.jm_arg << " on "
                  << p.to_string() << ":\n";
            print_matrix(c.out, m, c.cfg.precision);
        }
        return kExitOk;
    }
    if (c.intertwiner) {
        RepMatrix m = alternating_intertwiner(p, c.cfg.enumeration_cap);
        if (c.cfg.json) {
            j["intertwiner"] = to_json(m);
            c.out << j.dump(2) << '\n';
        } else {
            c.out << "alternating intertwiner " << p.to_string() << " -> "
                  << p.conjugate().to_string() << ":\n";
            print_matrix(c.out, m, c.cfg.precision);
        }
        return kExitOk;
    }
    if (c.cfg.json) {
        Json gens = Json::array();
        for (int i = 1; i < p.size(); ++i)
            gens.push_back(
                to_json(adjacent_matrix(p, i, c.cfg.enumeration_cap)));
        j["generators"] = std::move(gens);
        c.out << j.dump(2) << '\n';
    } else {
        for (int i = 1; i < p.size(); ++i) {
            c.out << "generator (" << i << ' ' << i + 1 << ") on "
                  << p.to_string() << ":\n";
            print_matrix(c.out, adjacent_matrix(p, i, c.cfg.enumeration_cap),
                         c.cfg.precision);
        }
    }
    return kExitOk;
}

int cmd_basis_map(Command& c) {
    Partition p = c.partition(c.partition_arg);
    PhysicalBasisMap map = physical_basis_map(p);
    if (c.cfg.json) {
        c.out << to_json(map).dump(2) << '\n';
        return kExitOk;
    }
    for (size_t w = 0; w < map.twice_weights.size(); ++w) {
        for (size_t t = 0; t < map.basis.size(); ++t) {
            int tm = map.twice_weights[w];
            c.out << "tableau " << t << "  2m = " << tm << ":";
            for (std::uint32_t s = 0;
                 s < static_cast<std::uint32_t>(1 << map.n); ++s) {
                double coeff = map.vectors[w](s, static_cast<int>(t));
                if (std::abs(coeff) < 1e-12) continue;
                c.out << "  " << std::showpos << std::fixed
                      << std::setprecision(c.cfg.precision) << coeff
                      << std::noshowpos << "|" << format_ket(s, map.n)
                      << ">";
                c.out.unsetf(std::ios::fixed);
                c.out << std::setprecision(6);
            }
            c.out << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify(Command& c) {
    VerifyOptions opt;
    opt.max_n = c.verify_max_n;
    opt.lr_max_total = std::min(10, std::max(2, 2 * c.verify_max_n));
    opt.cross_max_total = std::min(10, std::max(6, c.verify_max_n + 3));
    opt.element_tol = c.cfg.tolerance;
    opt.product_tol = c.cfg.tolerance * 10;
    opt.seed = c.cfg.seed;
    std::vector<CheckReport> reports = run_all_checks(opt);
    int failures = 0;
    if (c.cfg.json) {
        Json j = Json::array();
        for (const CheckReport& r : reports) {
            if (!r.passed) ++failures;
            j.push_back(to_json(r));
        }
        c.out << Json{{"checks", std::move(j)}, {"failures", failures}}.dump(2)
              << '\n';
    } else {
        for (const CheckReport& r : reports) {
            if (!r.passed) ++failures;
            c.out << (r.passed ? "PASS" : "FAIL") << "  " << r.name
                  << "  (max violation " << std::scientific
                  << std::setprecision(2) << r.max_violation << " vs "
                  << r.tolerance << ")";
            c.out.unsetf(std::ios::scientific);
            c.out << std::setprecision(6);
            if (!r.details.empty()) c.out << "  " << r.details;
            c.out << '\n';
        }
        c.out << reports.size() - failures << " / " << reports.size()
              << " checks passed\n";
    }
    return failures == 0 ? kExitOk : kExitInternal;
}

int cmd_ancilla(Command& c) {
    PartitionFamily fam = c.family();
    Partition extra = ancilla_suggestion(fam, engine_config(c.cfg));
    if (c.cfg.json)
        c.out << Json{{"family", family_text(fam.members())},
                      {"d", fam.d()},
                      {"ancilla", extra.to_string()}}
                     .dump(2)
              << '\n';
    else
        c.out << extra.to_string() << '\n';
    return kExitOk;
}

int cmd_cartan(Command& c) {
    PartitionFamily fam = c.family();
    auto [nu, verdict] = cartan_target(fam, engine_config(c.cfg));
    if (c.cfg.json) {
        Json j = to_json(verdict);
        j["target"] = nu.to_string();
        c.out << j.dump(2) << '\n';
    } else {
        c.out << nu.to_string() << '\n';
        print_verdict(c.out, verdict, false);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact combinatorial kernels and universality decisions for "
                 "exchange-only computation"};
    app.require_subcommand(1);

    Command c{CliConfig{}, out, err};
    app.add_flag("--json", c.cfg.json, "emit one JSON object");
    app.add_option("--tolerance", c.cfg.tolerance,
                   "numeric tolerance, in (0, 1e-3)");
    app.add_option("--enum-cap", c.cfg.enumeration_cap,
                   "tableau enumeration cap (cells)");
    app.add_option("--lr-cap", c.cfg.lr_cap,
                   "coefficient expansion cap (total cells)");
    app.add_option("--time-budget-ms", c.cfg.time_budget_ms,
                   "search budget for minimal families");
    app.add_option("--seed", c.cfg.seed, "seed for randomized sweeps");
    app.add_option("--precision", c.cfg.precision, "printed decimal places");
    app.add_flag("--sort", c.cfg.sort_parts,
                 "sort rising parts instead of rejecting them");

    int rc = kExitOk;
    auto wire = [&](CLI::App* sub, int (*fn)(Command&)) {
        sub->callback([&c, fn, &rc]() {
            validate(c.cfg);
            rc = fn(c);
        });
    };

    CLI::App* dim = app.add_subcommand("dim", "dimension of a partition");
    dim->add_option("partition", c.partition_arg)->required();
    wire(dim, cmd_dim);

    CLI::App* conj = app.add_subcommand("conj", "conjugate partition");
    conj->add_option("partition", c.partition_arg)->required();
    wire(conj, cmd_conj);

    CLI::App* cls = app.add_subcommand("classify", "partition classification");
    cls->add_option("partition", c.partition_arg)->required();
    wire(cls, cmd_classify);

    CLI::App* lr = app.add_subcommand(
        "lr", "coefficient of nu in lambda x mu, or the full expansion");
    lr->add_option("lambda", c.partition_arg)->required();
    lr->add_option("mu", c.partition_arg2)->required();
    lr->add_option("nu", c.partition_arg3);
    wire(lr, cmd_lr);

    CLI::App* pset = app.add_subcommand("product-set",
                                        "labels reachable from a family");
    pset->add_option("--family", c.family_arg)->required();
    pset->add_option("--d", c.d_arg)->required();
    wire(pset, cmd_product_set);

    CLI::App* uni = app.add_subcommand("universal",
                                       "decide universality of a family");
    uni->add_option("--family", c.family_arg)->required();
    uni->add_option("--d", c.d_arg);
    wire(uni, cmd_universal);

    CLI::App* mf = app.add_subcommand("minimal-families",
                                      "minimal universal self-conjugate "
                                      "families");
    mf->add_option("--d", c.d_arg)->required();
    wire(mf, cmd_minimal_families);

    CLI::App* eff = app.add_subcommand("efficiency-table",
                                       "best universal encoding per (n, d)");
    eff->add_option("--n-max", c.n_max);
    eff->add_option("--d", c.d_list);
    wire(eff, cmd_efficiency_table);

    CLI::App* repn = app.add_subcommand("repn", "representation matrices");
    repn->add_option("partition", c.partition_arg)->required();
    repn->add_option("--perm", c.perm_arg, "cycles, e.g. \"(1 2)(3 4)\"");
    repn->add_option("--jm", c.jm_arg, "transposition-sum element index");
    repn->add_flag("--intertwiner", c.intertwiner);
    wire(repn, cmd_repn);

    CLI::App* bm = app.add_subcommand("basis-map",
                                      "two-state physical basis vectors");
    bm->add_option("partition", c.partition_arg)->required();
    wire(bm, cmd_basis_map);

    CLI::App* verify = app.add_subcommand("verify", "run the check suites");
    verify->add_option("--max-n", c.verify_max_n);
    wire(verify, cmd_verify);

    CLI::App* anc = app.add_subcommand("ancilla",
                                       "smallest verified ancilla fix");
    anc->add_option("--family", c.family_arg)->required();
    anc->add_option("--d", c.d_arg)->required();
    wire(anc, cmd_ancilla);

    CLI::App* cart = app.add_subcommand("cartan", "highest-weight target");
    cart->add_option("--family", c.family_arg)->required();
    wire(cart, cmd_cartan);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitRejected;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRejected;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return rc;
}

}  // namespace exou::cli
