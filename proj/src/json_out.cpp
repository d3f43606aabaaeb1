#include "sgc4/json_out.hpp"

#include "sgc4/io.hpp"

namespace sgc4 {

namespace {

using nlohmann::json;

std::string girth_class(int i, int j) {
    return "g" + std::to_string(i) + std::to_string(j);
}

json hom_json(const Homomorphism& h) {
    return json{{"switch", h.switch_set}, {"map", h.map}};
}

}  // namespace

nlohmann::json hom_verdict_json(const HomVerdict& v) {
    switch (v.kind) {
        case HomVerdict::Kind::mapped:
            return json{{"verdict", "mapped"},
                        {"switch", v.hom->switch_set},
                        {"map", v.hom->map}};
        case HomVerdict::Kind::nohom_witness: {
            const auto& p = v.witness->path;
            json path = json::array();
            for (int i = 0; i < 3; i++) path.push_back(json::array({p[i], p[i + 1]}));
            return json{{"verdict", "nohom"}, {"witness", {{"path", path}}}};
        }
        case HomVerdict::Kind::nohom_girth:
            return json{{"verdict", "nohom"},
                        {"reason", "girth"},
                        {"class", girth_class(v.girth_i, v.girth_j)}};
        case HomVerdict::Kind::nohom_exhausted:
            return json{{"verdict", "nohom"}, {"reason", "exhausted"}};
    }
    throw GraphError(Err::internal_assertion, "bad verdict kind");
}

nlohmann::json critical_verdict_json(const CriticalVerdict& v) {
    switch (v.kind) {
        case CriticalVerdict::Kind::critical:
            return json{{"verdict", "critical"}};
        case CriticalVerdict::Kind::maps_to_c4:
            return json{{"verdict", "maps_to_c4"}, {"hom", hom_json(*v.hom)}};
        case CriticalVerdict::Kind::fails_girth:
            return json{{"verdict", "fails_girth"},
                        {"class", girth_class(v.girth_i, v.girth_j)}};
        case CriticalVerdict::Kind::non_critical_edge:
            return json{{"verdict", "non_critical_edge"},
                        {"edge", json::array({v.edge->u, v.edge->v,
                                              std::string(1, sign_char(v.edge->s))})}};
    }
    throw GraphError(Err::internal_assertion, "bad verdict kind");
}

nlohmann::json girth_json(const GirthVector& gv) {
    json out = json::object();
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            int val = gv.at(i, j);
            if (val == girth_inf)
                out[girth_class(i, j)] = "inf";
            else
                out[girth_class(i, j)] = val;
        }
    return out;
}

nlohmann::json mad_json(const Rational& r) {
    return json{{"num", r.numerator()},
                {"den", r.denominator()},
                {"text", std::to_string(r.numerator()) + "/" + std::to_string(r.denominator())}};
}

nlohmann::json coloring_json(const std::optional<std::vector<int>>& colors) {
    if (!colors) return json{{"colorable", false}};
    return json{{"colorable", true}, {"colors", *colors}};
}

nlohmann::json switch_iso_json(const std::optional<std::vector<int>>& map) {
    if (!map) return json{{"isomorphic", false}};
    return json{{"isomorphic", true}, {"map", *map}};
}

nlohmann::json census_json(const CensusReport& report) {
    auto entry_json = [](const CensusEntry& e) {
        return json{{"graph", serialize(e.graph)},
                    {"edges", e.edge_count},
                    {"potential", e.potential_value}};
    };
    json critical = json::array(), exceptions = json::array();
    for (const CensusEntry& e : report.critical_found) critical.push_back(entry_json(e));
    for (const CensusEntry& e : report.exceptions) exceptions.push_back(entry_json(e));
    return json{{"n", report.n},
                {"classes_examined", report.classes_examined},
                {"critical_found", critical},
                {"exceptions", exceptions}};
}

nlohmann::json graph_json(const std::string& serialized) {
    return json{{"graph", serialized}};
}

}  // namespace sgc4
