#pragma once

#include "bing/cube.hpp"

#include <cstdint>

namespace bing {

// Deterministic stream; all sampling in the project goes through explicit seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t bounded(std::uint64_t n) { return next() % n; }
    double unit_double() { return (next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t s_;
};

// Rational offsets k/den with 1 <= k <= den-1. With den a power of 7 the
// samples stay off every lattice plane of the construction (denominators
// there only carry the factors 2 and 3).
inline constexpr long kSampleDen = 2401; // 7^4

Rational sample_unit_rational(SplitMix64& rng, long den = kSampleDen);
Vec3 sample_in_cube(SplitMix64& rng, const Cube& c, long den = kSampleDen);
// Uniform over the collection: cube uniform by index, then offsets.
Vec3 sample_in_collection(SplitMix64& rng, const CubeCollection& c, long den = kSampleDen);
// Uniform over an axis-aligned rational box.
Vec3 sample_in_box(SplitMix64& rng, const Vec3& lo, const Vec3& hi, long den = kSampleDen);

} // namespace bing
