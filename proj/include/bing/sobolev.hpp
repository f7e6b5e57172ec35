#pragma once

#include "bing/bilip.hpp"
#include "bing/involution.hpp"
#include "bing/straightener.hpp"

namespace bing {

struct MeasuredConstants {
    double L_inner = 1; // straightener local bilipschitz constant (exact piece max)
    double L_diamond = 1; // twist-conjugate constant against the (sigma/sigma')#L shape
    double L1 = 1;      // pointwise-bound constant: 2x the calibrated supremum
    double L1_raw = 1;  // calibrated supremum itself
    double L2 = 1;      // schedule constant, set to L_inner
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double L_inner_sampled = 1; // derivative-norm sampling confirmation
    Vec3 L1_witness;            // argmax point of the calibrated ratio
};

// Recompute the bound ratio at a point (witness replay).
double lip_ratio_at(const DefiningSequence& seq, const PLMapChain& f,
                    const MeasuredConstants& c, const Vec3& x);

// L_inner from the production straightener pieces plus a sampled confirmation;
// L_diamond from the conjugated twist of a reference pair; L1 calibrated so
// the pointwise bound holds on the calibration stream.
MeasuredConstants measure_constants(const DefiningSequence& seq, const PLMapChain& f,
                                    std::size_t samples, std::uint64_t seed);

// eta(x): number of construction levels whose image-torus corner cubes contain x.
int corner_index(const DefiningSequence& seq, const Vec3& x);
// ell(x): largest k <= K with x in X_k; 0 outside X_0 by convention.
int level_index(const DefiningSequence& seq, const Vec3& x);

double lip_bound(const DefiningSequence& seq, const MeasuredConstants& c, const Vec3& x);

struct LipReport {
    std::size_t samples = 0, violations = 0, skeleton_rejects = 0;
    double max_ratio = 0; // max |Df| / bound over samples
};

LipReport check_lip_bound(const DefiningSequence& seq, const PLMapChain& f,
                          const MeasuredConstants& c, std::size_t samples, std::uint64_t seed);

struct LevelProfile {
    int k = 0;
    Rational measure_exact;  // |X_k|
    Rational corner_measure; // level-k corner region
    double energy_y = 0, energy_y_halfwidth = 0;       // over Y_k
    double energy_corner = 0, energy_corner_halfwidth = 0; // over the eta>0 stratum (upper estimate)
    double cap_y = 0;      // 2 L1 (2/3)^k
    double cap_corner = 0; // 2^{-k}
    std::size_t samples = 0, rejected = 0;
};

// Stratified Monte Carlo of int |Df|^p over Y_k and the corner strata for
// k = 0..K-1, plus a final row for the unstratified deepest level X_K.
std::vector<LevelProfile> lp_energy(const DefiningSequence& seq, const PLMapChain& f,
                                    const Rational& p, const MeasuredConstants& c,
                                    std::size_t samples_per_level, std::uint64_t seed);

struct AdjointReport {
    double lhs = 0, lhs_halfwidth = 0;
    double rhs = 0, rhs_halfwidth = 0;
    std::size_t samples = 0;
    double relative_residual = 0;
};

// Monte Carlo check of int |Df|^p dx = int |adj Df|^p / |J|^{p-1} dy over a
// symmetric box containing the support of the twisting.
AdjointReport adjoint_identity(const DefiningSequence& seq, const PLMapChain& f,
                               const Rational& p, std::size_t samples, std::uint64_t seed);

} // namespace bing
