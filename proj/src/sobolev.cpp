#include "bing/sobolev.hpp"
#include "bing/sampler.hpp"

#include <cmath>

namespace bing {

int corner_index(const DefiningSequence& seq, const Vec3& x) {
    int eta = 0;
    for (int k = 0; k <= seq.K; ++k)
        if (seq.corner_region(k).covers(x)) ++eta;
    return eta;
}

int level_index(const DefiningSequence& seq, const Vec3& x) {
    int l = seq.level_of(x);
    return l < 0 ? 0 : l;
}

double lip_bound(const DefiningSequence& seq, const MeasuredConstants& c, const Vec3& x) {
    int eta = corner_index(seq, x);
    int ell = level_index(seq, x);
    return c.L1 * std::pow(c.L_inner, 2.0 * eta) / seq.side(ell).to_double();
}

MeasuredConstants measure_constants(const DefiningSequence& seq, const PLMapChain& f,
                                    std::size_t samples, std::uint64_t seed) {
    MeasuredConstants out;
    out.samples = samples;
    out.seed = seed;
    out.L_inner = straightener_bilipschitz(1);
    // sampled confirmation: derivative norms of the straightener at random points
    {
        CornerFrame fr;
        fr.corner_origin = Vec3::of(0, 0, 0);
        fr.side = rat(1);
        fr.to_prev = {1, 0, 0};
        fr.to_next = {0, 1, 0};
        auto phi = corner_straightener(fr, 1);
        CubeCollection region(rat(1), {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
        SplitMix64 rng(seed);
        double best = 1;
        for (std::size_t i = 0; i < samples; ++i) {
            Vec3 x = sample_in_collection(rng, region);
            try {
                Mat3 d = phi->derivative(x);
                best = std::max(best, std::max(d.op_norm(), d.inverse().op_norm()));
            } catch (const SkeletonError&) {
            }
        }
        out.L_inner_sampled = best;
    }
    // L_diamond: conjugated twist of a deepest-level reference pair
    {
        const std::string w = seq.words_at(seq.K).front();
        const CubicalLoop& loop = seq.loop_of(w);
        CubicalLoop inner = middle_third_ring(loop);
        double shape = loop.side().to_double() / inner.side().to_double() *
                       static_cast<double>(loop.size());
        NestedPair pair;
        pair.outer = loop;
        pair.inner = std::move(inner);
        pair.uniform = true;
        auto theta = twist_map(
            pair, Rotation{pair.inner.size(), static_cast<long>(pair.inner.size() / 4)}, 1);
        PLMapChain conj(
            {theta->inverse(),
             std::make_shared<AffinePrimitive>(Affine{involution_matrix(seq.choice), Vec3()}),
             theta});
        SplitMix64 rng(seed + 1);
        double best = 1;
        std::size_t n = std::min<std::size_t>(samples, 20000);
        for (std::size_t i = 0; i < n; ++i) {
            Vec3 x = sample_in_collection(rng, loop.collection());
            try {
                best = std::max(best, conj.derivative_at(x).op_norm());
            } catch (const SkeletonError&) {
            } catch (const EvalError&) {
            }
        }
        out.L_diamond = best / shape;
    }
    // L1: calibrate the pointwise bound. Half the stream is uniform over the
    // levels; the other half targets the corner neighborhoods of the deepest
    // loops, where the straightener pieces compound with the shear and the
    // ratio field takes its extreme values. The reported constant carries a
    // factor-two headroom over the calibrated supremum.
    {
        std::vector<Int3> chunk_cells;
        for (const auto& w : seq.words_at(seq.K)) {
            const CubicalLoop& l = seq.loop_of(w);
            std::size_t n = l.size();
            for (auto cpos : l.corner_positions())
                for (std::size_t off = 0; off < 3; ++off)
                    chunk_cells.push_back(l.cell_at((cpos + n + off - 1) % n));
        }
        CubeCollection chunk_region(seq.side(seq.K), std::move(chunk_cells));
        SplitMix64 rng(seed + 2);
        double best = 1;
        std::size_t n = std::min<std::size_t>(std::max<std::size_t>(samples, 40000), 200000);
        for (std::size_t i = 0; i < n; ++i) {
            Vec3 x;
            if (i % 2 == 0) {
                int k = static_cast<int>((i / 2) % static_cast<std::size_t>(seq.K + 1));
                x = sample_in_collection(rng, seq.level_union(k));
            } else {
                x = sample_in_collection(rng, chunk_region);
            }
            try {
                double norm = f.derivative_at(x).op_norm();
                int eta = corner_index(seq, x);
                int ell = level_index(seq, x);
                double ratio =
                    norm * seq.side(ell).to_double() / std::pow(out.L_inner, 2.0 * eta);
                if (ratio > best) {
                    best = ratio;
                    out.L1_witness = x;
                }
            } catch (const SkeletonError&) {
            }
        }
        out.L1_raw = best;
        out.L1 = 2.0 * best;
    }
    out.L2 = out.L_inner;
    return out;
}

double lip_ratio_at(const DefiningSequence& seq, const PLMapChain& f,
                    const MeasuredConstants& c, const Vec3& x) {
    double norm = f.derivative_at(x).op_norm();
    int eta = corner_index(seq, x);
    int ell = level_index(seq, x);
    return norm * seq.side(ell).to_double() / std::pow(c.L_inner, 2.0 * eta);
}

LipReport check_lip_bound(const DefiningSequence& seq, const PLMapChain& f,
                          const MeasuredConstants& c, std::size_t samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LipReport rep;
    std::vector<Int3> chunk_cells;
    for (const auto& w : seq.words_at(seq.K)) {
        const CubicalLoop& l = seq.loop_of(w);
        std::size_t n = l.size();
        for (auto cpos : l.corner_positions())
            for (std::size_t off = 0; off < 3; ++off)
                chunk_cells.push_back(l.cell_at((cpos + n + off - 1) % n));
    }
    CubeCollection chunk_region(seq.side(seq.K), std::move(chunk_cells));
    std::size_t done = 0;
    while (done < samples) {
        Vec3 x;
        if (done % 4 == 3) {
            x = sample_in_collection(rng, chunk_region);
        } else {
            int k = static_cast<int>(done % static_cast<std::size_t>(seq.K + 1));
            x = sample_in_collection(rng, seq.level_union(k));
        }
        try {
            double norm = f.derivative_at(x).op_norm();
            double bound = lip_bound(seq, c, x);
            double ratio = norm / bound;
            rep.max_ratio = std::max(rep.max_ratio, ratio);
            if (norm > bound * (1 + 1e-12)) ++rep.violations;
            ++done;
        } catch (const SkeletonError&) {
            ++rep.skeleton_rejects;
        }
    }
    rep.samples = done;
    return rep;
}

namespace {

struct Accum {
    double sum = 0, sumsq = 0;
    std::size_t n = 0;
    void add(double v) {
        sum += v;
        sumsq += v * v;
        ++n;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0; }
    double halfwidth() const {
        if (n < 2) return 0;
        double m = mean();
        double var = std::max(0.0, sumsq / static_cast<double>(n) - m * m);
        return 1.96 * std::sqrt(var / static_cast<double>(n));
    }
};

} // namespace

std::vector<LevelProfile> lp_energy(const DefiningSequence& seq, const PLMapChain& f,
                                    const Rational& p, const MeasuredConstants& c,
                                    std::size_t samples_per_level, std::uint64_t seed) {
    std::vector<LevelProfile> rows;
    double pd = p.to_double();
    for (int k = 0; k <= seq.K; ++k) {
        LevelProfile row;
        row.k = k;
        row.measure_exact = seq.level_volume(k);
        row.corner_measure = seq.corner_volume(k);
        row.cap_y = 2.0 * c.L1 * std::pow(2.0 / 3.0, k);
        row.cap_corner = std::pow(2.0, -k);
        SplitMix64 rng(seed + static_cast<std::uint64_t>(k));
        const bool deepest = k == seq.K;
        Accum acc;
        double volume = seq.level_volume(k).to_double();
        std::size_t done = 0;
        while (done < samples_per_level) {
            Vec3 x = sample_in_collection(rng, seq.level_union(k));
            try {
                double val = 0;
                bool in_next = !deepest && seq.level_contains(k + 1, x);
                if (!in_next && (deepest || corner_index(seq, x) == 0)) {
                    double norm = f.derivative_at(x).op_norm();
                    val = std::pow(norm, pd);
                }
                acc.add(val);
                ++done;
            } catch (const SkeletonError&) {
                ++row.rejected;
            }
        }
        row.energy_y = acc.mean() * volume;
        row.energy_y_halfwidth = acc.halfwidth() * volume;
        row.samples = done;

        if (!deepest) {
            // corner stratum: upper estimate over corner regions of levels <= k
            double e = 0, hw = 0;
            for (int j = 0; j <= k; ++j) {
                const CubeCollection& reg = seq.corner_region(j);
                if (reg.size() == 0) continue;
                Accum ac;
                std::size_t n = samples_per_level / static_cast<std::size_t>(k + 1);
                std::size_t cdone = 0, guard = 0;
                while (cdone < n && guard < 4 * n + 64) {
                    ++guard;
                    Vec3 x = sample_in_collection(rng, reg);
                    try {
                        double val = 0;
                        if (seq.level_contains(k, x) && !seq.level_contains(k + 1, x)) {
                            double norm = f.derivative_at(x).op_norm();
                            val = std::pow(norm, pd);
                        }
                        ac.add(val);
                        ++cdone;
                    } catch (const SkeletonError&) {
                        ++row.rejected;
                    }
                }
                double vol = reg.volume().to_double();
                e += ac.mean() * vol;
                hw += ac.halfwidth() * vol;
            }
            row.energy_corner = e;
            row.energy_corner_halfwidth = hw;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

AdjointReport adjoint_identity(const DefiningSequence& seq, const PLMapChain& f,
                               const Rational& p, std::size_t samples, std::uint64_t seed) {
    AdjointReport rep;
    rep.samples = samples;
    double pd = p.to_double();
    Rational r0 = seq.side(0);
    Vec3 lo(Rational(-4) * r0, Rational(-3) * r0, Rational(-1) * r0);
    Vec3 hi(Rational(4) * r0, Rational(3) * r0, Rational(2) * r0);
    double volume = 1;
    for (int ax = 0; ax < 3; ++ax) volume *= (hi[ax] - lo[ax]).to_double();
    SplitMix64 rng(seed);
    Accum lhs, rhs;
    std::size_t done = 0;
    while (done < samples) {
        Vec3 x = sample_in_box(rng, lo, hi);
        Vec3 y = sample_in_box(rng, lo, hi);
        try {
            Mat3 dx = f.derivative_at(x);
            double l = std::pow(dx.op_norm(), pd);
            Mat3 dy = f.derivative_at(y);
            double adj_norm = dy.adjugate().op_norm();
            double jac = std::abs(dy.det().to_double());
            double r = std::pow(adj_norm, pd) / std::pow(jac, pd - 1.0);
            lhs.add(l);
            rhs.add(r);
            ++done;
        } catch (const SkeletonError&) {
        }
    }
    rep.lhs = lhs.mean() * volume;
    rep.lhs_halfwidth = lhs.halfwidth() * volume;
    rep.rhs = rhs.mean() * volume;
    rep.rhs_halfwidth = rhs.halfwidth() * volume;
    rep.relative_residual = std::abs(rep.lhs - rep.rhs) / std::max(1e-300, std::abs(rep.lhs));
    return rep;
}

} // namespace bing
