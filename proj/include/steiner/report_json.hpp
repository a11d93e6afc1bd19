#pragma once

#include <json.hpp>

#include "steiner/batch.hpp"
#include "steiner/steiner.hpp"

namespace steiner {

// Report layout:
// {
//   "triangle": {"z1": [re, im], "z2": [re, im], "z3": [re, im]},
//   "in":     {"conic": [A, B, C, D, E, F], "foci": [[re, im], [re, im]],
//              "center": [re, im], "a": .., "b": .., "ecc": .., "theta": ..},
//   "circum": {...same...},
//   "tangency_points": {"zE1": .., "zE2": .., "zE3": .., "zE1r": .., "zE2r": .., "zE3r": ..},
//   "circum_points": {"zEc4": .., "zEc5": ..}
// }
// Doubles are written with 17 significant digits, so reading a report back
// reproduces every value exactly.
nlohmann::json report_to_json(const SteinerReport& report);

// Inverse of report_to_json. Throws nlohmann::json::exception on schema
// errors and GeometryError if the stored triangle is collinear.
SteinerReport report_from_json(const nlohmann::json& j);

// {"triangle": {...}, "error": "<kind>", "message": "..."}
nlohmann::json failure_to_json(const TriangleInput& input, const BatchFailure& failure);

nlohmann::json triangle_to_json(const TriangleInput& input);

// Reads {"z1": [re, im], "z2": [re, im], "z3": [re, im]}. Throws
// std::invalid_argument on malformed input.
TriangleInput triangle_from_json(const nlohmann::json& j);

}  // namespace steiner
