#pragma once

#include <array>
#include <cstdint>

namespace bing {

// Reference twist on the round solid torus B^2(R) x S^1(ell), floating point.
// Points live in R^4 as (x1, x2, ell*cos(theta), ell*sin(theta)).
struct RoundTorusModel {
    double r = 0.5, R = 1.0, ell = 1.0, alpha = 0.0;
};

using R4 = std::array<double, 4>;

double round_twist_angle(const RoundTorusModel& m, double radius); // u_{r,R}
R4 round_twist_apply(const RoundTorusModel& m, const R4& p);

// Max operator norm of the central-difference Jacobian (intrinsic 3-frame)
// over deterministic samples.
double round_twist_max_derivative(const RoundTorusModel& m, std::size_t samples,
                                  std::uint64_t seed, double step = 1e-6);

// Sampled bilipschitz constant: max of distance ratios both ways over pairs.
double round_twist_bilipschitz(const RoundTorusModel& m, std::size_t pairs, std::uint64_t seed);

} // namespace bing
