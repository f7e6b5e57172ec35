#pragma once

#include "bing/loop.hpp"
#include "bing/schedule.hpp"

namespace bing {

// A racetrack child inside an arc: two strands at transverse offsets 1 and
// m-2 (the remaining transverse coordinate centered), joined by an elbow in
// each terminal cube. The elbow crossbar sits crossbar_depth cells in from
// the entry face of the terminal; its two ends are the child corners the
// proper-nesting conditions ask for.
struct Racetrack {
    CubicalLoop loop; // side = arc side / m
    Int3 mid_t1, mid_t2; // crossbar middle cells (child lattice), split anchors
    int axis_t1 = -1, axis_t2 = -1; // crossbar axes at the two ends
};

Racetrack make_racetrack(const CubicalArc& arc, long m, int crossbar_axis_t1,
                         long crossbar_depth);

// Hooked pair of children for a splitting: the deep child (crossbar one cell
// from the far face) threads the shallow one (crossbar three cells from the
// entry face) at both shared terminals; the two elbow planes are
// perpendicular there. Tries the axis assignments and returns the first that
// stays perpendicular at both ends.
struct ClaspPair {
    Racetrack plus, minus;
};

ClaspPair clasped_children(const Splitting& split, long m);

// Unhooked variant used where the rotation-equivariant tree forces the two
// children to be congruent images of each other: both elbows are shallow and
// coplanar, nested without threading.
Racetrack parallel_child(const CubicalArc& arc, long m);

// Image of a loop under the cell-level involution action.
CubicalLoop map_loop(InvolutionChoice c, const CubicalLoop& l);

// The base loop of the construction: a 6x4 rectangle ring (16 cubes, model
// loop with two long and two short sides), centered so both involutions act
// on it exactly; side r0, slab z in [0, r0].
CubicalLoop root_loop(const Rational& r0);

// Split terminals of the root inner ring for the chosen involution.
std::pair<Int3, Int3> root_terminals(InvolutionChoice c);

} // namespace bing
