#pragma once

#include <string>

#include <json.hpp>

#include "cubecert/certify.hpp"
#include "cubecert/polytope.hpp"
#include "cubecert/subdivision.hpp"

namespace cubecert {

using Json = nlohmann::ordered_json;

/// {"dim": n, "halfspaces": [{"normal": [..], "offset": r}, ...]}
Polytope polytope_from_json(const Json& j);

/// {"N": N, "basis": [[..], [..]]}
Polytope section_from_json(const Json& j);

/// Accepts either schema, sniffing by the presence of "basis".
Polytope load_input(const std::string& path);

Json polytope_to_json(const Polytope& p);
Json hypothesis_to_json(const HypothesisReport& report);
Json certificate_to_json(const Certificate& cert);
Json subdivision_to_json(const std::vector<SimplexTriple>& triples);

/// OFF mesh of the subdivision simplices (3D only; boundary facets of each
/// simplex as triangles).
std::string subdivision_to_off(const std::vector<SimplexTriple>& triples);

}  // namespace cubecert
