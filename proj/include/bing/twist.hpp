#pragma once

#include "bing/tube.hpp"

namespace bing {

// rho-twist of a uniform middle-third nested pair: unroll, shear by
// shift * side(L') along the tube, reroll; identity outside |L|. The shift-0
// twist is the literal identity primitive.
PrimitivePtr twist_map(const NestedPair& pair, const Rotation& rho, int depth);

// Both chart directions plus the shear, exposed for diagnostics.
struct TwistParts {
    Unrolled unrolled;
    PrimitivePtr shear;
    PrimitivePtr whole;
};

TwistParts twist_map_parts(const NestedPair& pair, const Rotation& rho, int depth);

} // namespace bing
