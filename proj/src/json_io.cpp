#include "exou/json_io.hpp"

namespace exou {

Json to_json(const Partition& p) {
    return Json{{"parts", p.parts()}, {"text", p.to_string()}};
}

Json to_json(const PartitionClass& c) {
    return Json{{"kind", to_string(c.kind)},
                {"self_conjugate", c.self_conjugate},
                {"rows", c.rows},
                {"cols", c.cols},
                {"diagonal_length", c.diagonal_length}};
}

Json to_json(const StandardTableau& t) {
    return Json(t.rows());
}

Json to_json(const RepMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.mat.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.mat.cols(); ++c) row.push_back(m.mat(r, c));
        rows.push_back(std::move(row));
    }
    Json out{{"shape", m.col_shape.to_string()}, {"entries", rows}};
    if (!(m.row_shape == m.col_shape))
        out["codomain_shape"] = m.row_shape.to_string();
    return out;
}

Json to_json(const CheckReport& r) {
    return Json{{"name", r.name},
                {"passed", r.passed},
                {"max_violation", r.max_violation},
                {"tolerance", r.tolerance},
                {"details", r.details}};
}

Json to_json(const UniversalityVerdict& v) {
    Json trace = Json::array();
    for (const RuleStep& step : v.rule_trace)
        trace.push_back(Json{{"rule", step.rule}, {"reason", step.reason}});
    Json out{{"decision",
              v.decision == Decision::Universal ? "universal"
                                                : "not-universal"},
             {"d", v.d},
             {"rule_trace", std::move(trace)}};
    if (v.witness_partitions) {
        Json w = Json::array();
        for (const Partition& p : *v.witness_partitions)
            w.push_back(p.to_string());
        out["witness_partitions"] = std::move(w);
    }
    return out;
}

Json to_json(const EfficiencyRow& row) {
    return Json{{"n", row.n},
                {"d", row.d},
                {"partition", row.best_partition.to_string()},
                {"parts", row.best_partition.parts()},
                {"dim", row.dim},
                {"efficiency", row.efficiency}};
}

Json to_json(const PhysicalBasisMap& map, double coeff_cut) {
    Json out{{"shape", map.shape.to_string()}, {"n", map.n}};
    Json basis = Json::array();
    for (const StandardTableau& t : map.basis) basis.push_back(to_json(t));
    out["basis"] = std::move(basis);
    Json states = Json::array();
    for (size_t w = 0; w < map.twice_weights.size(); ++w) {
        for (size_t t = 0; t < map.basis.size(); ++t) {
            Json entry{{"tableau", static_cast<int>(t)},
                       {"twice_m", map.twice_weights[w]}};
            Json coeffs = Json::array();
            for (std::uint32_t s = 0;
                 s < static_cast<std::uint32_t>(1 << map.n); ++s) {
                double c = map.vectors[w](s, static_cast<int>(t));
                if (std::abs(c) <= coeff_cut) continue;
                coeffs.push_back(
                    Json{{"ket", format_ket(s, map.n)}, {"coeff", c}});
            }
            entry["coefficients"] = std::move(coeffs);
            states.push_back(std::move(entry));
        }
    }
    out["vectors"] = std::move(states);
    return out;
}

Partition partition_from_json(const Json& j) {
    if (j.is_string()) return parse_partition(j.get<std::string>());
    if (j.is_object() && j.contains("parts"))
        return Partition(j["parts"].get<std::vector<int>>());
    return Partition(j.get<std::vector<int>>());
}

}  // namespace exou
