#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "tref/refine.hpp"

namespace tref {

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const OrientedSep& s);
nlohmann::json to_json(std::span<const OrientedSep> seps);
nlohmann::json to_json(const TreeDecomposition& td);
// Maximal elements of t, as separations pointing towards it.
nlohmann::json to_json(const Tangle& t, const SepSystem& sys);

// Parts classified as essential (with their tangle) or inessential (with
// their star and torso width), plus the skeleton each part refines.
nlohmann::json report_json(const Decomposition& d, const SepSystem& sys);

std::string to_dot(const TreeDecomposition& td);
std::string to_dot(const Decomposition& d);

}  // namespace tref
