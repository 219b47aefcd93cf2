#include "exou/orthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace exou {

Permutation::Permutation(int n) : images_(n) {
    if (n < 0) throw IndexOutOfRange("negative degree");
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
            throw Inconsistent("not a bijection of {1..n}");
        seen[v] = true;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw IndexOutOfRange("bad transposition (" + std::to_string(a) + " " +
                              std::to_string(b) + ") in degree " +
                              std::to_string(n));
    Permutation p(n);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::string& text) {
    Permutation p(n);
    std::vector<int> cycle;
    bool in_cycle = false;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) return;
        int v = 0;
        try {
            v = std::stoi(token);
        } catch (const std::exception&) {
            throw ParseError("bad cycle entry '" + token + "'");
        }
        if (v < 1 || v > n)
            throw ParseError("cycle entry " + token + " out of 1.." +
                             std::to_string(n));
        cycle.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == '(') {
            if (in_cycle) throw ParseError("nested '(' in cycles");
            in_cycle = true;
            cycle.clear();
        } else if (c == ')') {
            flush_token();
            if (!in_cycle) throw ParseError("unmatched ')' in cycles");
            in_cycle = false;
            // (a b c) sends a->b, b->c, c->a.
            for (size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i];
                int to = cycle[(i + 1) % cycle.size()];
                p.images_[from - 1] = to;
            }
            std::vector<bool> seen(n + 1, false);
            for (int v : cycle) {
                if (seen[v]) throw ParseError("repeated entry in cycle");
                seen[v] = true;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!in_cycle) throw ParseError("digit outside cycle");
            token += c;
        } else if (c == ' ' || c == ',' || c == '\t') {
            flush_token();
        } else {
            throw ParseError(std::string("unexpected character '") + c +
                             "' in cycles");
        }
    }
    if (in_cycle) throw ParseError("unterminated cycle");
    // Composed cycles must stay a bijection; disjointness is not required
    // but overlapping cycles compose left-to-right, which we reject to keep
    // the notation unambiguous.
    std::vector<bool> seen(n + 1, false);
    for (int v : p.images_) {
        if (seen[v]) throw Inconsistent("cycles do not define a bijection");
        seen[v] = true;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= degree(); ++k)
        if (apply(k) != k) return false;
    return true;
}

std::vector<int> Permutation::adjacent_word() const {
    std::vector<int> line = images_;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < line.size(); ++i) {
            if (line[i] > line[i + 1]) {
                std::swap(line[i], line[i + 1]);
                word.push_back(static_cast<int>(i + 1));
                moved = true;
            }
        }
    }
    return word;
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (int k = 1; k <= degree(); ++k) {
        if (k > 1) out += ' ';
        out += std::to_string(apply(k));
    }
    return out + "]";
}

CheckReport make_report(std::string name, double violation, double tolerance,
                        std::string details) {
    CheckReport r;
    r.name = std::move(name);
    r.max_violation = violation;
    r.tolerance = tolerance;
    r.passed = violation <= tolerance;
    r.details = std::move(details);
    return r;
}

RepMatrix adjacent_matrix(const Partition& shape, int i, int cell_cap) {
    if (i < 1 || i >= shape.size())
        throw IndexOutOfRange("generator index " + std::to_string(i) +
                              " outside 1.." + std::to_string(shape.size() - 1));
    std::vector<StandardTableau> basis = enumerate_standard(shape, cell_cap);
    int dim = static_cast<int>(basis.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int t = 0; t < dim; ++t) {
        const StandardTableau& tab = basis[t];
        int d = axial_distance(tab, i, i + 1);
        m(t, t) = 1.0 / d;
        if (!tab.adjacent_in_line(i)) {
            int s = canonical_index(basis, tab.swapped(i));
            m(s, t) = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
        }
    }
    return RepMatrix{shape, shape, std::move(m)};
}

RepMatrix permutation_matrix(const Partition& shape, const Permutation& s,
                             int cell_cap) {
    if (s.degree() != shape.size())
        throw DegreeMismatch("permutation degree " +
                             std::to_string(s.degree()) +
                             " does not match |shape| = " +
                             std::to_string(shape.size()));
    std::vector<StandardTableau> basis = enumerate_standard(shape, cell_cap);
    int dim = std::max<int>(1, static_cast<int>(basis.size()));
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
    std::vector<int> word = s.adjacent_word();
    // line = s . s_{w_1} ... s_{w_k} = id, so s = s_{w_k} ... s_{w_1}.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        m = m * adjacent_matrix(shape, *it, cell_cap).mat;
    }
    // m currently holds rho(s_{w_k}) ... rho(s_{w_1}) applied left-to-right.
    return RepMatrix{shape, shape, std::move(m)};
}

RepMatrix jucys_murphy_matrix(const Partition& shape, int k, int cell_cap) {
    if (k < 1 || k > shape.size())
        throw IndexOutOfRange("element index " + std::to_string(k) +
                              " outside 1.." + std::to_string(shape.size()));
    std::vector<StandardTableau> basis = enumerate_standard(shape, cell_cap);
    int dim = static_cast<int>(basis.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 1; i < k; ++i) {
        Permutation t = Permutation::transposition(shape.size(), i, k);
        m += permutation_matrix(shape, t, cell_cap).mat;
    }
    return RepMatrix{shape, shape, std::move(m)};
}

RepMatrix alternating_intertwiner(const Partition& shape, int cell_cap) {
    std::vector<StandardTableau> basis = enumerate_standard(shape, cell_cap);
    Partition conj = shape.conjugate();
    std::vector<StandardTableau> conj_basis = enumerate_standard(conj, cell_cap);
    int dim = static_cast<int>(basis.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int t = 0; t < dim; ++t) {
        int target = canonical_index(conj_basis, basis[t].transposed());
        m(target, t) = basis[t].alternating_sign();
    }
    return RepMatrix{shape, conj, std::move(m)};
}

namespace {

double max_abs(const Eigen::MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

std::vector<CheckReport> verify_structure(const Partition& shape,
                                          double element_tol,
                                          double product_tol, int cell_cap) {
    if (shape.size() > cell_cap)
        throw SizeLimit("shape " + shape.to_string() +
                        " exceeds the enumeration cap");
    std::vector<CheckReport> out;
    const std::string tag = shape.to_string() + " ";
    int n = shape.size();
    std::vector<StandardTableau> basis = enumerate_standard(shape, cell_cap);
    int dim = static_cast<int>(basis.size());
    Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dim, dim);

    std::vector<Eigen::MatrixXd> gens;
    for (int i = 1; i < n; ++i)
        gens.push_back(adjacent_matrix(shape, i, cell_cap).mat);

    double orth = 0.0, invol = 0.0;
    for (const auto& q : gens) {
        orth = std::max(orth, max_abs(q.transpose() * q - eye));
        invol = std::max(invol, max_abs(q * q - eye));
    }
    out.push_back(make_report(tag + "generator orthogonality", orth,
                              element_tol));
    out.push_back(make_report(tag + "generator involution", invol,
                              element_tol));

    double braid = 0.0, commute = 0.0;
    for (size_t i = 0; i + 1 < gens.size(); ++i)
        braid = std::max(braid, max_abs(gens[i] * gens[i + 1] * gens[i] -
                                        gens[i + 1] * gens[i] * gens[i + 1]));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 2; j < gens.size(); ++j)
            commute = std::max(commute,
                               max_abs(gens[i] * gens[j] - gens[j] * gens[i]));
    out.push_back(make_report(tag + "braid relation", braid, product_tol));
    out.push_back(make_report(tag + "distant commutation", commute,
                              product_tol));

    double jm_offdiag = 0.0, jm_content = 0.0, jm_commute = 0.0;
    std::vector<Eigen::MatrixXd> jms;
    for (int k = 1; k <= n; ++k) {
        Eigen::MatrixXd x = jucys_murphy_matrix(shape, k, cell_cap).mat;
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) {
                if (a == b) continue;
                jm_offdiag = std::max(jm_offdiag, std::abs(x(a, b)));
            }
            jm_content = std::max(
                jm_content, std::abs(x(a, a) - basis[a].content(k)));
        }
        jms.push_back(std::move(x));
    }
    for (size_t a = 0; a < jms.size(); ++a)
        for (size_t b = a + 1; b < jms.size(); ++b)
            jm_commute = std::max(
                jm_commute, max_abs(jms[a] * jms[b] - jms[b] * jms[a]));
    out.push_back(make_report(tag + "jucys-murphy diagonal", jm_offdiag,
                              element_tol));
    out.push_back(make_report(tag + "jucys-murphy contents", jm_content,
                              element_tol));
    out.push_back(make_report(tag + "jucys-murphy commuting", jm_commute,
                              element_tol));

    // Conjugation through the intertwiner: M rho(t) = -rho'(t)^T M for
    // every transposition t.
    Eigen::MatrixXd inter = alternating_intertwiner(shape, cell_cap).mat;
    Partition conj = shape.conjugate();
    double conj_violation = 0.0;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            Permutation t = Permutation::transposition(n, a, b);
            Eigen::MatrixXd rho = permutation_matrix(shape, t, cell_cap).mat;
            Eigen::MatrixXd rho_conj =
                permutation_matrix(conj, t, cell_cap).mat;
            conj_violation = std::max(
                conj_violation,
                max_abs(inter * rho + rho_conj.transpose() * inter));
        }
    }
    out.push_back(make_report(tag + "conjugate intertwining", conj_violation,
                              product_tol));

    if (shape.is_self_conjugate()) {
        // Sample of the derived algebra: differences of transpositions and
        // their pairwise commutators, each required to satisfy
        // X^T M + M X = 0.
        std::vector<Eigen::MatrixXd> transpositions;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                transpositions.push_back(
                    permutation_matrix(
                        shape, Permutation::transposition(n, a, b), cell_cap)
                        .mat);
        double form = 0.0;
        auto check_member = [&](const Eigen::MatrixXd& x) {
            form = std::max(form,
                            max_abs(x.transpose() * inter + inter * x));
        };
        for (size_t a = 0; a < transpositions.size(); ++a) {
            for (size_t b = a + 1; b < transpositions.size(); ++b) {
                check_member(transpositions[a] - transpositions[b]);
                check_member(transpositions[a] * transpositions[b] -
                             transpositions[b] * transpositions[a]);
            }
        }
        out.push_back(make_report(tag + "bilinear form membership", form,
                                  product_tol));

        bool expect_symmetric = (shape.size() - shape.diagonal_length()) % 4 == 0;
        double sym = expect_symmetric ? max_abs(inter - inter.transpose())
                                      : max_abs(inter + inter.transpose());
        out.push_back(make_report(
            tag + "intertwiner symmetry rule", sym, element_tol,
            expect_symmetric ? "expect symmetric" : "expect antisymmetric"));
    }
    return out;
}

}  // namespace exou
