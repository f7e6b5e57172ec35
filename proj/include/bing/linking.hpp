#pragma once

#include "bing/geom.hpp"

#include <vector>

namespace bing {

// Gauss linking number of two disjoint closed rational polylines, computed by
// exact signed crossings of a generic axis-aligned projection. Throws if no
// direction in the deterministic candidate list is generic (does not happen
// for lattice curves in practice).
long linking_number(const std::vector<Vec3>& a, const std::vector<Vec3>& b);

// Core polyline of a cyclic cube sequence: the cube centers.
std::vector<Vec3> core_polyline(const class CubicalLoop& l);

} // namespace bing
