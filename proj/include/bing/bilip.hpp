#pragma once

#include "bing/plmap.hpp"
#include "bing/sampler.hpp"

namespace bing {

struct BilipWitness {
    Vec3 a, b;
    double ratio = 1.0;
};

struct BilipResult {
    double constant = 1.0;
    BilipWitness witness;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

// Exact per-piece measurement for piecewise-affine data: max over pieces of
// max(op(A), op(A^-1)).
double pieces_bilipschitz(const std::vector<Piece>& pieces);

// Sampled pair-ratio measurement over a cube-collection region.
BilipResult measure_bilipschitz(const PLMapChain& f, const CubeCollection& region,
                                std::size_t pairs, std::uint64_t seed);

// Replay a witness pair: returns the observed two-sided ratio.
double replay_witness(const PLMapChain& f, const BilipWitness& w);

} // namespace bing
