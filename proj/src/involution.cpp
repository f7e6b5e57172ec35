#include "bing/involution.hpp"
#include "bing/sampler.hpp"

#include <algorithm>
#include <stdexcept>

namespace bing {

long TwistSchedule::shift_for(const std::string& w, int K, std::size_t inner_size) const {
    auto it = overrides.find(w);
    if (it != overrides.end()) return it->second;
    switch (kind) {
        case Kind::AllZero: return 0;
        case Kind::AllQuarter: return static_cast<long>(inner_size / 4);
        case Kind::DeepestQuarter:
            return static_cast<int>(w.size()) == K ? static_cast<long>(inner_size / 4) : 0;
    }
    return 0;
}

namespace {

// Stage map: word twists with disjoint supports, dispatched through the
// level union.
class StagePrimitive final : public PrimitiveMap {
public:
    StagePrimitive(std::shared_ptr<const CubeCollection> cells,
                   std::vector<std::pair<Int3, int>> lookup, std::vector<PrimitivePtr> twists)
        : cells_(std::move(cells)), lookup_(std::move(lookup)), twists_(std::move(twists)) {}

    Vec3 evaluate(const Vec3& x) const override {
        const PrimitiveMap* t = dispatch(x);
        return t ? t->evaluate(x) : x;
    }

    Mat3 derivative(const Vec3& x) const override {
        const PrimitiveMap* t = dispatch(x);
        return t ? t->derivative(x) : Mat3::identity();
    }

    PrimitivePtr inverse() const override {
        std::vector<PrimitivePtr> inv;
        inv.reserve(twists_.size());
        for (const auto& t : twists_) inv.push_back(t->inverse());
        return std::make_shared<StagePrimitive>(cells_, lookup_, std::move(inv));
    }

    std::string kind() const override { return "stage"; }

private:
    const PrimitiveMap* dispatch(const Vec3& x) const {
        auto cell = cells_->cell_of_point(x);
        if (!cell) return nullptr;
        auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(*cell, -1),
                                   [](const std::pair<Int3, int>& a, const std::pair<Int3, int>& b) {
                                       const Int3 &u = a.first, &v = b.first;
                                       if (u.x != v.x) return u.x < v.x;
                                       if (u.y != v.y) return u.y < v.y;
                                       return u.z < v.z;
                                   });
        if (it == lookup_.end() || !(it->first == *cell)) return nullptr;
        return twists_[static_cast<std::size_t>(it->second)].get();
    }

    std::shared_ptr<const CubeCollection> cells_;
    std::vector<std::pair<Int3, int>> lookup_;
    std::vector<PrimitivePtr> twists_;
};

int straightener_depth_for(const DefiningSequence& seq, int level) {
    return std::max(1, seq.K - level);
}

} // namespace

PrimitivePtr build_stage(const DefiningSequence& seq, int k, const TwistSchedule& sched) {
    if (k < 1 || k > seq.K) throw std::invalid_argument("build_stage: level out of range");
    auto words = seq.words_at(k);
    std::sort(words.begin(), words.end());
    bool all_zero = true;
    std::vector<PrimitivePtr> twists;
    std::vector<std::pair<Int3, int>> lookup;
    for (const auto& w : words) {
        const CubicalLoop& loop = seq.loop_of(w);
        CubicalLoop inner = middle_third_ring(loop);
        long shift = sched.shift_for(w, seq.K, inner.size());
        PrimitivePtr tw;
        if (shift % static_cast<long>(inner.size()) == 0) {
            tw = std::make_shared<IdentityPrimitive>();
        } else {
            all_zero = false;
            NestedPair pair;
            pair.outer = loop;
            pair.inner = std::move(inner);
            pair.uniform = true; // certified by validate_sequence for generated trees
            tw = twist_map(pair, Rotation{pair.inner.size(), shift},
                           straightener_depth_for(seq, k));
        }
        int idx = static_cast<int>(twists.size());
        twists.push_back(std::move(tw));
        for (std::size_t p = 0; p < loop.size(); ++p) lookup.push_back({loop.cell_at(p), idx});
    }
    if (all_zero) return std::make_shared<IdentityPrimitive>();
    std::sort(lookup.begin(), lookup.end(), [](const auto& a, const auto& b) {
        const Int3 &u = a.first, &v = b.first;
        if (u.x != v.x) return u.x < v.x;
        if (u.y != v.y) return u.y < v.y;
        return u.z < v.z;
    });
    auto cells = std::make_shared<const CubeCollection>(seq.level_union(k));
    return std::make_shared<StagePrimitive>(std::move(cells), std::move(lookup),
                                            std::move(twists));
}

PLMapChain psi_chain(const DefiningSequence& seq, int k, const TwistSchedule& sched) {
    // psi_k = theta_1 o ... o theta_k applies theta_k first.
    PLMapChain chain;
    for (int j = k; j >= 1; --j) {
        auto st = build_stage(seq, j, sched);
        if (st->kind() != "identity") chain.push_back(std::move(st));
    }
    return chain;
}

PLMapChain f_chain(const DefiningSequence& seq, int k, const TwistSchedule& sched) {
    PLMapChain psi = psi_chain(seq, k, sched);
    PLMapChain f = psi.inverse();
    f.push_back(std::make_shared<AffinePrimitive>(Affine{involution_matrix(seq.choice), Vec3()}));
    return f.then(psi);
}

ChainSet::ChainSet(const DefiningSequence& seq, const TwistSchedule& sched) {
    std::vector<PrimitivePtr> stages; // stage k at index k-1, identities dropped
    for (int k = 1; k <= seq.K; ++k) stages.push_back(build_stage(seq, k, sched));
    auto Rp = std::make_shared<AffinePrimitive>(Affine{involution_matrix(seq.choice), Vec3()});
    for (int k = 0; k <= seq.K; ++k) {
        PLMapChain psi;
        for (int j = k; j >= 1; --j)
            if (stages[static_cast<std::size_t>(j - 1)]->kind() != "identity")
                psi.push_back(stages[static_cast<std::size_t>(j - 1)]);
        PLMapChain f = psi.inverse();
        f.push_back(Rp);
        fs_.push_back(f.then(psi));
        psis_.push_back(std::move(psi));
    }
}

InvolutionReport involution_check(const PLMapChain& f, const CubeCollection& region,
                                  std::size_t samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    InvolutionReport rep;
    rep.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) {
        Vec3 x = sample_in_collection(rng, region);
        Vec3 y = f.evaluate(f.evaluate(x));
        if (!(y == x)) {
            ++rep.mismatches;
            if (rep.witnesses.size() < 8) rep.witnesses.push_back(x);
        }
    }
    return rep;
}

std::vector<ImageTorus> image_tori(const DefiningSequence& seq, const TwistSchedule& sched,
                                   int max_level) {
    return image_tori(seq, ChainSet(seq, sched), max_level);
}

std::vector<ImageTorus> image_tori(const DefiningSequence& seq, const ChainSet& chains,
                                   int max_level) {
    std::vector<ImageTorus> out;
    for (int k = 0; k <= max_level; ++k) {
        const PLMapChain& psi = chains.psi(k);
        for (const auto& w : seq.words_at(k)) {
            const CubicalLoop& l = seq.loop_of(w);
            const Rational rk = seq.side(k);
            std::vector<Int3> cells;
            cells.reserve(l.size());
            for (std::size_t p = 0; p < l.size(); ++p) {
                Cube q = l.cube_at(p);
                Vec3 lo = psi.evaluate(q.origin);
                // all eight vertices must land on the r_k lattice and span a cube
                Vec3 span_lo = lo, span_hi = lo;
                for (const auto& v : q.vertices()) {
                    Vec3 img = psi.evaluate(v);
                    for (int ax = 0; ax < 3; ++ax) {
                        if (!((img[ax] / rk).is_integer()))
                            throw std::runtime_error(
                                "image_tori: off-lattice vertex image at word " + w);
                        if (img[ax] < span_lo[ax]) span_lo[ax] = img[ax];
                        if (img[ax] > span_hi[ax]) span_hi[ax] = img[ax];
                    }
                }
                for (int ax = 0; ax < 3; ++ax)
                    if (span_hi[ax] - span_lo[ax] != rk)
                        throw std::runtime_error("image_tori: cube image is not a cube at word " +
                                                 w);
                cells.push_back({(span_lo.x / rk).to_int64(), (span_lo.y / rk).to_int64(),
                                 (span_lo.z / rk).to_int64()});
            }
            auto v = CubicalLoop::validate(CubeCollection(rk, std::move(cells)));
            if (!ok(v))
                throw std::runtime_error("image_tori: image is not a cubical loop at word " + w);
            ImageTorus t;
            t.word = w;
            t.torus = get_value(v);
            t.corner_count = t.torus.corner_positions().size();
            t.source_corner_count = l.corner_positions().size();
            out.push_back(std::move(t));
        }
    }
    return out;
}

bool check_conjugacy(const DefiningSequence& seq, const ChainSet& chains, int max_level) {
    for (int k = 0; k <= max_level; ++k) {
        const PLMapChain& psi = chains.psi(k);
        const PLMapChain& f = chains.f(k);
        for (const auto& w : seq.words_at(k)) {
            std::string tw = seq.choice == InvolutionChoice::Reflect ? w : flip_word(w);
            const CubicalLoop& src = seq.loop_of(w);
            const CubicalLoop& dst = seq.loop_of(tw);
            // f(psi(Q)) must equal psi(R(Q)) cube for cube
            for (std::size_t p = 0; p < src.size(); ++p) {
                Cube q = src.cube_at(p);
                Vec3 c_img = f.evaluate(psi.evaluate(q.center()));
                Vec3 expect = psi.evaluate(involution_matrix(seq.choice) * q.center());
                if (!(c_img == expect)) return false;
                // and the image center sits inside the flipped word's torus
                Int3 cell{(expect.x / src.side()).floor_int64(),
                          (expect.y / src.side()).floor_int64(),
                          (expect.z / src.side()).floor_int64()};
                if (!dst.collection().contains_cell(cell)) return false;
            }
        }
    }
    return true;
}

std::vector<Vec3> fixed_set_probe(const DefiningSequence& seq, const ChainSet& chains, int k,
                                  int grid) {
    const PLMapChain& psi = chains.psi(k);
    const PLMapChain& f = chains.f(k);
    // bounding box of the root loop
    Rational r0 = seq.side(0);
    Rational lo_y = Rational(-3) * r0, hi_y = Rational(3) * r0;
    Rational lo_z = Rational(-1) * r0, hi_z = Rational(2) * r0;
    std::vector<Vec3> out;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            Rational ty = Rational(2 * i + 1) / Rational(2 * (grid + 1));
            Rational tz = Rational(2 * j + 1) / Rational(2 * (grid + 1));
            Vec3 p(Rational(0), lo_y + (hi_y - lo_y) * ty, lo_z + (hi_z - lo_z) * tz);
            if (seq.choice == InvolutionChoice::Rotate) p.y = Rational(0);
            Vec3 img = psi.evaluate(p);
            if (!(f.evaluate(img) == img))
                throw std::logic_error("fixed_set_probe: image not fixed by f");
            out.push_back(img);
            if (seq.choice == InvolutionChoice::Rotate) break; // the axis is one-dimensional
        }
    return out;
}

std::vector<ConvergenceRow> convergence_diagnostics(const DefiningSequence& seq,
                                                    const ChainSet& chains, std::size_t samples,
                                                    std::uint64_t seed) {
    std::vector<ConvergenceRow> rows;
    std::vector<PLMapChain> psis;
    for (int k = 0; k <= seq.K; ++k) psis.push_back(chains.psi(k));
    for (int k = 0; k + 1 <= seq.K; ++k) {
        ConvergenceRow row;
        row.k = k;
        SplitMix64 rng(seed + static_cast<std::uint64_t>(k));
        for (std::size_t i = 0; i < samples; ++i) {
            // stratified: the difference is supported inside X_{k+1}
            int stratum = static_cast<int>(i % static_cast<std::size_t>(k + 2));
            Vec3 x = sample_in_collection(rng, seq.level_union(std::min(stratum, k + 1)));
            Vec3 a = psis[static_cast<std::size_t>(k)].evaluate(x);
            Vec3 b = psis[static_cast<std::size_t>(k + 1)].evaluate(x);
            row.sup_diff = std::max(row.sup_diff, norm2(a - b));
        }
        for (const auto& w : seq.words_at(k + 1)) {
            const CubicalLoop& l = seq.loop_of(w);
            // bounding-box diameter of the (lattice) torus
            Int3 lo = l.cell_at(0), hi = l.cell_at(0);
            for (std::size_t p = 0; p < l.size(); ++p) {
                Int3 c = l.cell_at(p);
                for (int ax = 0; ax < 3; ++ax) {
                    if (c[ax] < lo[ax]) lo[ax] = c[ax];
                    if (c[ax] > hi[ax]) hi[ax] = c[ax];
                }
            }
            double s = seq.side(k + 1).to_double();
            double dx = (hi.x - lo.x + 1) * s, dy = (hi.y - lo.y + 1) * s,
                   dz = (hi.z - lo.z + 1) * s;
            row.max_torus_diam =
                std::max(row.max_torus_diam, std::sqrt(dx * dx + dy * dy + dz * dz));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace bing
