#include "bing/sampler.hpp"

namespace bing {

Rational sample_unit_rational(SplitMix64& rng, long den) {
    long k = 1 + static_cast<long>(rng.bounded(static_cast<std::uint64_t>(den - 1)));
    return rat(k, den);
}

Vec3 sample_in_cube(SplitMix64& rng, const Cube& c, long den) {
    return Vec3(c.origin.x + c.side * sample_unit_rational(rng, den),
                c.origin.y + c.side * sample_unit_rational(rng, den),
                c.origin.z + c.side * sample_unit_rational(rng, den));
}

Vec3 sample_in_collection(SplitMix64& rng, const CubeCollection& c, long den) {
    std::size_t i = static_cast<std::size_t>(rng.bounded(c.size()));
    return sample_in_cube(rng, c.cube(i), den);
}

Vec3 sample_in_box(SplitMix64& rng, const Vec3& lo, const Vec3& hi, long den) {
    Vec3 p;
    for (int ax = 0; ax < 3; ++ax)
        p[ax] = lo[ax] + (hi[ax] - lo[ax]) * sample_unit_rational(rng, den);
    return p;
}

} // namespace bing
