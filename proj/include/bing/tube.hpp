#pragma once

#include "bing/loop.hpp"
#include "bing/plmap.hpp"

namespace bing {

// Straight model tube (R mod period) x [0, sigma]^2 with a concentric inner
// square tube of side sigma_inner.
struct Tube {
    Rational period;
    Rational sigma;
    Rational sigma_inner;
};

// World <-> tube chart pair for one cubical loop. Charts are rigid on cubes
// away from corner neighborhoods and straightener-based across corners; the
// backward map reduces t mod period before piece lookup (identical lifts).
struct Unrolled {
    Tube tube;
    PrimitivePtr forward;  // |L| -> tube
    PrimitivePtr backward; // tube -> |L|
    std::size_t start_pos = 0;             // cyclic position of slot 0
    std::vector<std::size_t> slot_of_pos;  // cyclic position -> slot index
};

Unrolled tube_unroll(const CubicalLoop& l, int depth);

// Checked variant for a uniform middle-third pair: additionally verifies that
// every inner-ring cube lands exactly on the straight concentric inner tube.
Unrolled tube_unroll(const NestedPair& pair, int depth);

// The shear (t, w) -> (t + lambda(w) d, w) with lambda = 1 on the inner square,
// 0 on the cross-section boundary, max-norm affine interpolation between.
// d_shift must be an integer multiple of sigma_inner.
PrimitivePtr tube_twist(const Tube& tube, const Rational& d_shift);

} // namespace bing
