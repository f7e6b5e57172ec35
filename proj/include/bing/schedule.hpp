#pragma once

#include "bing/geom.hpp"
#include "bing/plmap.hpp"

#include <vector>

namespace bing {

enum class InvolutionChoice { Reflect, Rotate };

Mat3 involution_matrix(InvolutionChoice c);
// Cell-level action on lattice cells: [x, x+1] -> [-x-1, -x] etc.
Int3 involution_cell(InvolutionChoice c, const Int3& cell);
const char* involution_name(InvolutionChoice c);

// Per-level side lengths r_k = r_{k-1} / n_k, with every r_k under the caps
// min{3^{-k/(2-p)}, 15^{-k}, (10 L2^p)^{-k}} scaled by r_0. All comparisons
// are exact rational-power tests; L2 is a rational upper bound of the
// measured straightener constant.
struct SideSchedule {
    Rational p;
    Rational L2;
    std::vector<long> divisors;  // n_1..n_K
    std::vector<Rational> sides; // r_0..r_K

    int depth() const { return static_cast<int>(divisors.size()); }
    const Rational& side(int k) const { return sides.at(static_cast<std::size_t>(k)); }
    long divisor(int k) const { return divisors.at(static_cast<std::size_t>(k - 1)); } // n_k, k>=1
};

enum class DivisorPolicy {
    // Smallest multiple of 3 with n >= 15 under the cap.
    Plain,
    // Smallest n == 3 (mod 6) with n >= 21 under the cap; keeps n/3 an odd
    // integer >= 7, which the clasp layout needs.
    ClaspCompatible,
};

// Exact test r <= min{3^{-k/(2-p)}, 15^{-k}, (10 L2^p)^{-k}}.
bool side_under_caps(const Rational& r, int k, const Rational& p, const Rational& L2);

SideSchedule make_schedule(const Rational& p, const Rational& L2, int K, DivisorPolicy policy,
                           const Rational& r0);

// True when a level's divisor exceeds the given threshold (schedule blow-up
// warning for p close to 2).
bool schedule_explodes(const SideSchedule& s, long threshold = 1000);

} // namespace bing
