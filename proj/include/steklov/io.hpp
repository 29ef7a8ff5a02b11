#pragma once

#include <string>

#include <json.hpp>

#include "steklov/charpoly.hpp"
#include "steklov/inverse.hpp"
#include "steklov/polygon.hpp"
#include "steklov/quasieig.hpp"
#include "steklov/search.hpp"

namespace steklov::io {

using json = nlohmann::ordered_json;

// Exact values as "p/q" strings, doubles as numbers.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Angle& a);
Angle angle_from_json(const json& j);

// {"n", "edges": [{"len", "kind"}], "angles": [{"pi_mult"} | {"rad"}]};
// a 0-gon carries "perimeter" instead of edges.
json to_json(const PolygonData& p);
PolygonData polygon_from_json(const json& j);

// {"terms": [{"freq", "coef"}], "const"}
json to_json(const TrigPoly& p);
TrigPoly poly_from_json(const json& j);
// kind,freq,coef with one "term" row per term and a final "const" row
std::string to_csv(const TrigPoly& p);

json to_json(const ReconstructionResult& r);
json to_json(const SearchReport& r);
json to_json(const QuadVsEqReport& r);
json to_json(const std::vector<PentagonPattern>& v);
json to_json(const SmoothCheckResult& r);
json to_json(const RootList& r);
std::string to_csv(const RootList& r);

const char* status_name(CheckStatus s);

json read_json_file(const std::string& path);

}  // namespace steklov::io
