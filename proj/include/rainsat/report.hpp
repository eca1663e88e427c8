#pragma once

#include <json.hpp>

#include "rainsat/constructions.hpp"
#include "rainsat/hypercube.hpp"
#include "rainsat/saturation.hpp"
#include "rainsat/search.hpp"

namespace rainsat {

using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g);
Json coloring_json(const EdgeColoring& c);
/// {verdict, nodes, ms, witness?}
Json outcome_json(const SearchOutcome& o);
Json enumeration_json(const EnumerationOutcome& e);
Json saturation_json(const SaturationReport& r);
Json rsat_json(const RsatResult& r);
Json uniqueness_json(const UniquenessReport& r);
Json tbfc_json(const Tbfc& t);
Json violations_json(const std::vector<Violation>& v);
Json clique_audit_json(const CliqueExtensionAudit& a);
Json unrestricted_json(const UnrestrictedOutcome& u);

}  // namespace rainsat
