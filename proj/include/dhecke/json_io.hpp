#pragma once

#include <string>

#include <json.hpp>

#include "dhecke/cohomology.hpp"
#include "dhecke/iwahori.hpp"
#include "dhecke/manifold.hpp"
#include "dhecke/toral_satake.hpp"

namespace dhecke {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into InputError with line and column.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

// Class values: [{"x": [factor indices], "y": [exponents], "c": coeff}, ...]
Json to_json(const CohClass& a);
CohClass coh_class_from_json(const Json& j, const AbelianLGroup& t, const CoeffRing& s, const std::string& where = "");

// {"terms": [{"lambda": [...], "value": <class>}, ...]}
Json to_json(const ToralElement& f);
ToralElement toral_element_from_json(const Json& j, const ToralContext& ctx);

// {"terms": [{"translation": [...], "w": i, "c": coeff}, ...]}
Json to_json(const IwahoriElement& a);
IwahoriElement iwahori_element_from_json(const Json& j, RootDatumPtr rd, const CoeffRing& s);

/// {"delta": d, "places": [{"label": ..., "orders": [...], "matrix": [[...]]}]}
TorusManifold manifold_from_json(const Json& j);
Json to_json(const TorusManifold& m);

}  // namespace dhecke
