#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bing/sobolev.hpp"
#include "bing/sampler.hpp"

using namespace bing;

namespace {
DefiningSequence& seq2() {
    static DefiningSequence s = defining_sequence(InvolutionChoice::Reflect, rat(1), 2, {});
    return s;
}
const PLMapChain& f2() {
    static PLMapChain c = f_chain(seq2(), 2, TwistSchedule{});
    return c;
}
const MeasuredConstants& consts() {
    static MeasuredConstants c = measure_constants(seq2(), f2(), 20000, 404);
    return c;
}
} // namespace

TEST_CASE("corner index examples") {
    auto& seq = seq2();
    // far outside every torus
    CHECK(corner_index(seq, Vec3::of(5, 5, 5)) == 0);
    // center of a corner cube of the root torus, outside deeper corners
    auto corners = seq.loop_of("").corner_positions();
    Vec3 c0 = seq.loop_of("").cube_at(corners[0]).center();
    CHECK(corner_index(seq, c0) >= 1);
    // an I-cube-only point of the root: middle of a long side
    bool found = false;
    for (std::size_t p = 0; p < seq.loop_of("").size() && !found; ++p) {
        if (seq.loop_of("").role_at(p) != CubeRole::I) continue;
        Vec3 c = seq.loop_of("").cube_at(p).center();
        if (corner_index(seq, c) == 0 && !seq.level_contains(1, c)) {
            CHECK(level_index(seq, c) == 0);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("level index convention") {
    auto& seq = seq2();
    CHECK(level_index(seq, Vec3::of(9, 9, 9)) == 0); // outside X_0
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Vec3 x = sample_in_collection(rng, seq.level_union(2));
        CHECK(level_index(seq, x) == 2);
    }
    // monotone under truncation is structural: levels only counted up to K
}

TEST_CASE("measured constants sane") {
    const auto& c = consts();
    CHECK(c.L_inner >= 1.0);
    CHECK(c.L_inner == doctest::Approx(2.2882).epsilon(1e-3));
    CHECK(c.L_inner_sampled <= c.L_inner + 1e-9);
    CHECK(c.L_inner_sampled > 2.0); // the extremal piece has positive volume
    CHECK(c.L_diamond > 0);
    CHECK(c.L1 >= 1.0);
    CHECK(c.L2 == c.L_inner);
}

TEST_CASE("argmax witness replays") {
    const auto& c = consts();
    double again = lip_ratio_at(seq2(), f2(), c, c.L1_witness);
    CHECK(again == doctest::Approx(c.L1_raw).epsilon(1e-12));
    CHECK(c.L1 == doctest::Approx(2 * c.L1_raw).epsilon(1e-12));
}

TEST_CASE("pointwise bound holds on fresh samples") {
    auto rep = check_lip_bound(seq2(), f2(), consts(), 4000, 999);
    CHECK(rep.violations == 0);
    CHECK(rep.samples == 4000);
    CHECK(rep.max_ratio <= 1.0 + 1e-9);
}

TEST_CASE("identity map energy equals the region measure") {
    auto& seq = seq2();
    PLMapChain id;
    MeasuredConstants c = consts();
    auto rows = lp_energy(seq, id, rat(1), c, 4000, 11);
    REQUIRE(rows.size() == 3u);
    // on Y_0 the identity has |D| = 1, so energy ~ |Y_0| <= |X_0|
    CHECK(rows[0].energy_y <= seq.level_volume(0).to_double() + 1e-12);
    CHECK(rows[0].energy_y > 0);
    // exact measures appear verbatim
    CHECK(rows[0].measure_exact == seq.level_volume(0));
    CHECK(rows[1].measure_exact == seq.level_volume(1));
}

TEST_CASE("energies decay and respect caps at K = 2") {
    auto rows = lp_energy(seq2(), f2(), rat(1), consts(), 6000, 21);
    REQUIRE(rows.size() == 3u);
    CHECK(rows[1].energy_y <= 0.8 * rows[0].energy_y);
    for (const auto& r : rows) {
        if (r.k < 2) {
            CHECK(r.energy_y <= r.cap_y);
            CHECK(r.energy_corner <= r.cap_corner * 1.2);
        }
    }
}

TEST_CASE("adjoint identity for affine pieces and the full map") {
    auto& seq = seq2();
    // pure reflection: both sides equal the box volume
    PLMapChain refl =
        PLMapChain::single(std::make_shared<AffinePrimitive>(Affine{reflect_matrix(), Vec3()}));
    auto rep = adjoint_identity(seq, refl, rat(3, 2), 2000, 5);
    CHECK(rep.lhs == doctest::Approx(rep.rhs).epsilon(1e-12));
    // the genuine involution at p = 1: residual within twice the half-widths
    auto rep2 = adjoint_identity(seq, f2(), rat(1), 20000, 6);
    CHECK(std::abs(rep2.lhs - rep2.rhs) <= 2 * (rep2.lhs_halfwidth + rep2.rhs_halfwidth) + 1e-9);
}
