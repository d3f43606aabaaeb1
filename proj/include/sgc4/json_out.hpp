#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgc4/census.hpp"
#include "sgc4/criticality.hpp"
#include "sgc4/homomorphism.hpp"
#include "sgc4/mad.hpp"
#include "sgc4/signed_graph.hpp"

namespace sgc4 {

// stable machine-readable forms of every CLI result; the shapes are pinned by
// the files under schemas/
nlohmann::json hom_verdict_json(const HomVerdict& v);
nlohmann::json critical_verdict_json(const CriticalVerdict& v);
nlohmann::json girth_json(const GirthVector& gv);
nlohmann::json mad_json(const Rational& r);
nlohmann::json coloring_json(const std::optional<std::vector<int>>& colors);
nlohmann::json switch_iso_json(const std::optional<std::vector<int>>& map);
nlohmann::json census_json(const CensusReport& report);
nlohmann::json graph_json(const std::string& serialized);

}  // namespace sgc4
