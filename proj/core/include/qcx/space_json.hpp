#pragma once

#include <nlohmann/json.hpp>

#include "qcx/space.hpp"

namespace qcx {

// Space-spec documents:
//   {"constructor": {"type": "Suspension", "base": {"type": "Circle", "perimeter": 3.14}},
//    "k": 1, "graph": {"nodes": [...], "edges": [[u, v, w], ...]}}
// Numbers may also be given as decimal strings.
SpaceSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const SpaceSpec& spec);

// Points: sphere -> [x...]; circle/line -> t; product -> [a, b];
// cone/suspension -> {"t", "base"}; join -> {"t", "p1", "p2"}; graph -> node id.
Point point_from_json(const Space& space, const nlohmann::json& j);
nlohmann::json point_to_json(const Space& space, const Point& p);

double number_from_json(const nlohmann::json& j, const char* what);

}  // namespace qcx
