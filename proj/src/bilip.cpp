#include "bing/bilip.hpp"

#include <cmath>

namespace bing {

double pieces_bilipschitz(const std::vector<Piece>& pieces) {
    double best = 1.0;
    for (const auto& p : pieces) {
        best = std::max(best, p.map.A.op_norm());
        best = std::max(best, p.map.A.inverse().op_norm());
    }
    return best;
}

namespace {
double dist(const Vec3& a, const Vec3& b) { return norm2(a - b); }
} // namespace

BilipResult measure_bilipschitz(const PLMapChain& f, const CubeCollection& region,
                                std::size_t pairs, std::uint64_t seed) {
    SplitMix64 rng(seed);
    BilipResult out;
    out.samples = pairs;
    out.seed = seed;
    for (std::size_t i = 0; i < pairs; ++i) {
        Vec3 a = sample_in_collection(rng, region);
        Vec3 b = sample_in_collection(rng, region);
        if (a == b) continue;
        Vec3 fa = f.evaluate(a), fb = f.evaluate(b);
        double d0 = dist(a, b), d1 = dist(fa, fb);
        if (d0 <= 0 || d1 <= 0) continue;
        double r = std::max(d1 / d0, d0 / d1);
        if (r > out.constant) {
            out.constant = r;
            out.witness = {a, b, r};
        }
    }
    return out;
}

double replay_witness(const PLMapChain& f, const BilipWitness& w) {
    Vec3 fa = f.evaluate(w.a), fb = f.evaluate(w.b);
    double d0 = norm2(w.a - w.b), d1 = norm2(fa - fb);
    return std::max(d1 / d0, d0 / d1);
}

} // namespace bing
