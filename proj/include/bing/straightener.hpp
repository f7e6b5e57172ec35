#pragma once

#include "bing/plmap.hpp"

namespace bing {

// Piecewise-affine corner straightener in the unit frame.
//
// Domain D = V u C u H with C = [0,1]^2 (corner square), V = [0,1]x[1,2]
// (arm whose far edge maps isometrically) and H = [1,2]x[0,1] (arm whose far
// edge stays fixed); image D' = [-1,2]x[0,1]. Depth 0 is the 6-triangle
// prototype. Depth d >= 1 keeps both arm middle-third strips rigid (identity
// on H's, the rotation (x,y) -> (1-y, x) on V's), maps the strip's elbow by a
// 1/3-scale copy of the depth d-1 map, and fills the collars with a fixed
// triangulation. The boundary trace is identical at every depth.
struct Piece2 {
    std::vector<std::array<Rational, 3>> hp; // a x + b y <= c
    std::array<Rational, 4> A;               // row-major 2x2
    std::array<Rational, 2> b;
};

std::vector<Piece2> straightener_pieces_2d(int depth);

// Slab extrusion of the 2D family: cells get z in [0,1], matrices extend by 1.
std::vector<Piece> straightener_pieces_3d(int depth);

// The affine extension of the V far-face behavior, (x,y,z) -> (1-y, x, z).
Affine straightener_exit_rotation();

// Per-piece exact-derivative bilipschitz constant max(op(A), op(A^-1)) over
// all pieces, in double precision.
double straightener_bilipschitz(int depth);

// Placement of an L-shaped corner neighborhood in world coordinates.
struct CornerFrame {
    Vec3 corner_origin; // origin vertex of the corner cube
    Rational side;
    Int3 to_prev; // unit direction from the corner cell toward the H-arm cell
    Int3 to_next; // unit direction toward the V-arm cell

    Affine unit_from_world() const; // F: |N| -> D x [0,1]
    Affine world_from_unit() const;
};

// Standalone straightener |N| -> straight 3-cube region in world coordinates
// (the V-arm unfolds past the corner, the H-arm stays put).
PrimitivePtr corner_straightener(const CornerFrame& f, int depth);

} // namespace bing
