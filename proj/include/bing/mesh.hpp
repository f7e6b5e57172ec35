#pragma once

#include "bing/cube.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace bing {

struct TriMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 3>> faces; // zero-based indices, outward CCW
};

// Boundary surface of the cube union as a watertight triangle mesh.
TriMesh boundary_mesh(const CubeCollection& c);

void write_obj(std::ostream& os, const TriMesh& m);

struct MeshStats {
    bool closed_manifold = false; // every edge in exactly two triangles
    long euler = 0;               // V - E + F
    int components = 0;
};

MeshStats analyze_mesh(const TriMesh& m);

} // namespace bing
