#pragma once

#include "bing/sequence.hpp"
#include "bing/twist.hpp"

namespace bing {

// Per-word twist shifts for the stage maps. The default twists the deepest
// materialized level by a quarter turn and leaves shallower stages alone;
// that is the only schedule whose stage maps carry every materialized cube
// onto a lattice cube (see image_tori, which hard-fails otherwise).
struct TwistSchedule {
    enum class Kind { DeepestQuarter, AllQuarter, AllZero };
    Kind kind = Kind::DeepestQuarter;
    std::map<std::string, long> overrides;

    long shift_for(const std::string& w, int K, std::size_t inner_size) const;
};

// Combined stage map theta_k: the per-word twists of level k glued along
// their disjoint supports, identity outside X_k.
PrimitivePtr build_stage(const DefiningSequence& seq, int k, const TwistSchedule& sched);

// psi_k = theta_1 o ... o theta_k (theta_k applied first) and the involution
// approximant f_k = psi_k o R o psi_k^{-1}.
PLMapChain psi_chain(const DefiningSequence& seq, int k, const TwistSchedule& sched);
PLMapChain f_chain(const DefiningSequence& seq, int k, const TwistSchedule& sched);

// Builds every stage once and serves the composed chains per level.
class ChainSet {
public:
    ChainSet(const DefiningSequence& seq, const TwistSchedule& sched);
    const PLMapChain& psi(int k) const { return psis_.at(static_cast<std::size_t>(k)); }
    const PLMapChain& f(int k) const { return fs_.at(static_cast<std::size_t>(k)); }
    int depth() const { return static_cast<int>(psis_.size()) - 1; }

private:
    std::vector<PLMapChain> psis_, fs_;
};

struct InvolutionReport {
    std::size_t samples = 0;
    std::size_t mismatches = 0;
    std::vector<Vec3> witnesses; // first few mismatching points
};

// Exact f(f(x)) == x over stratified samples of the region.
InvolutionReport involution_check(const PLMapChain& f, const CubeCollection& region,
                                  std::size_t samples, std::uint64_t seed);

// Image tori T_w with the cube-level bijection beta_w implied by psi. Every
// cube-vertex image must land on the r_{|w|} lattice; off-lattice images are
// a hard failure (insufficient schedule/straightener discipline).
struct ImageTorus {
    std::string word;
    CubicalLoop torus;
    std::size_t corner_count = 0, source_corner_count = 0;
};

std::vector<ImageTorus> image_tori(const DefiningSequence& seq, const TwistSchedule& sched,
                                   int max_level);
std::vector<ImageTorus> image_tori(const DefiningSequence& seq, const ChainSet& chains,
                                   int max_level);

// Conjugacy f_{|w|} o beta_w = beta_{tau(w)} o R as cube-level maps, checked
// on every cube of every word up to max_level.
bool check_conjugacy(const DefiningSequence& seq, const ChainSet& chains, int max_level);

// Grid images of Fix(R) under psi_k, each verified fixed by f_k exactly.
std::vector<Vec3> fixed_set_probe(const DefiningSequence& seq, const ChainSet& chains, int k,
                                  int grid);

struct ConvergenceRow {
    int k = 0;
    double sup_diff = 0;        // sup over samples |psi_{k+1}(x) - psi_k(x)|
    double max_torus_diam = 0;  // max diameter of level-(k+1) image tori
};

std::vector<ConvergenceRow> convergence_diagnostics(const DefiningSequence& seq,
                                                    const ChainSet& chains, std::size_t samples,
                                                    std::uint64_t seed);

} // namespace bing
