#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bing/sequence.hpp"
#include "bing/linking.hpp"

using namespace bing;

TEST_CASE("schedule: spec rounding examples") {
    // p = 1: all three caps are plain geometric sequences
    auto s1 = make_schedule(rat(1), rat(23, 10), 3, DivisorPolicy::Plain, rat(1));
    CHECK(s1.divisors[0] == 24); // smallest multiple of 3 with 1/n <= 1/23, n >= 15
    // p = 3/2: m_k = 2k, 3^{-2k} = 9^{-k} vs 15^{-k}: 15 binds among the powers
    CHECK(side_under_caps(rat(1, 15), 1, rat(3, 2), rat(1)));
    CHECK(!side_under_caps(rat(1, 9), 1, rat(3, 2), rat(1)));
    CHECK(!side_under_caps(rat(1, 14), 1, rat(3, 2), rat(1)));
    // clasp policy keeps n == 3 (mod 6) and n >= 21
    auto s2 = make_schedule(rat(1), rat(23, 10), 3, DivisorPolicy::ClaspCompatible, rat(1, 12));
    for (long n : s2.divisors) {
        CHECK(n % 6 == 3);
        CHECK(n >= 21);
    }
    CHECK(s2.divisors[0] == 21); // r0 = 1/12 already sits far under the caps
    for (int k = 1; k <= 3; ++k) CHECK(side_under_caps(s2.side(k), k, rat(1), rat(23, 10)));
    CHECK_THROWS(make_schedule(rat(2), rat(2), 1, DivisorPolicy::Plain, rat(1)));
}

TEST_CASE("root template validates for both choices") {
    for (auto choice : {InvolutionChoice::Reflect, InvolutionChoice::Rotate}) {
        CAPTURE(involution_name(choice));
        auto seq = defining_sequence(choice, rat(1), 1, {});
        auto checks = validate_sequence(seq);
        for (const auto& c : checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
        CHECK(seq.loop_of("").size() == 16);
        CHECK(seq.loop_of("").is_model_loop());
        // template symmetry: R maps the configuration to itself exactly
        const auto& e = seq.entries.at("");
        for (std::size_t p = 0; p < e.loop.size(); ++p)
            CHECK(e.loop.collection().contains_cell(involution_cell(choice, e.loop.cell_at(p))));
        for (std::size_t p = 0; p < e.inner.size(); ++p)
            CHECK(e.inner.collection().contains_cell(involution_cell(choice, e.inner.cell_at(p))));
    }
}

TEST_CASE("reflect template: per-loop symmetry and clasp linking certificate") {
    auto seq = defining_sequence(InvolutionChoice::Reflect, rat(1), 1, {});
    const auto& e = seq.entries.at("");
    // each child is itself R-invariant
    for (const CubicalLoop* l : {&e.plus.loop, &e.minus.loop})
        for (std::size_t p = 0; p < l->size(); ++p)
            CHECK(l->collection().contains_cell(
                involution_cell(InvolutionChoice::Reflect, l->cell_at(p))));
    // Gauss linking number of the core polylines is zero
    CHECK(linking_number(core_polyline(e.plus.loop), core_polyline(e.minus.loop)) == 0);
}

TEST_CASE("rotate template: children are congruent images, linking zero") {
    auto seq = defining_sequence(InvolutionChoice::Rotate, rat(1), 1, {});
    const auto& e = seq.entries.at("");
    CHECK(e.plus.loop.size() == e.minus.loop.size());
    for (std::size_t p = 0; p < e.plus.loop.size(); ++p)
        CHECK(e.minus.loop.collection().contains_cell(
            involution_cell(InvolutionChoice::Rotate, e.plus.loop.cell_at(p))));
    CHECK(linking_number(core_polyline(e.plus.loop), core_polyline(e.minus.loop)) == 0);
}

TEST_CASE("slow validators agree with the fast path at depth 1") {
    auto seq = defining_sequence(InvolutionChoice::Reflect, rat(1), 1, {});
    const auto& e = seq.entries.at("");
    auto np = validate_nested_pair(e.loop, e.inner, true);
    CHECK(ok(np));
    CHECK(dist2_to_boundary(e.loop, e.inner) == e.inner.side() * e.inner.side());
    CHECK(ok(validate_proper_nesting(e.split.plus, e.plus.loop)));
    CHECK(ok(validate_proper_nesting(e.split.minus, e.minus.loop)));
}

TEST_CASE("deeper tree: K = 2 validates for both choices") {
    for (auto choice : {InvolutionChoice::Reflect, InvolutionChoice::Rotate}) {
        CAPTURE(involution_name(choice));
        auto seq = defining_sequence(choice, rat(1), 2, {});
        auto checks = validate_sequence(seq);
        for (const auto& c : checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
        CHECK(seq.words_at(2).size() == 4);
    }
}

TEST_CASE("budget guard") {
    BuildOptions opt;
    opt.cube_budget = 100;
    CHECK_THROWS(defining_sequence(InvolutionChoice::Reflect, rat(1), 2, opt));
}

TEST_CASE("determinism: two builds agree cell for cell") {
    auto a = defining_sequence(InvolutionChoice::Reflect, rat(1), 2, {});
    auto b = defining_sequence(InvolutionChoice::Reflect, rat(1), 2, {});
    for (const auto& [w, l] : a.loops) {
        const auto& lb = b.loop_of(w);
        REQUIRE(l->size() == lb.size());
        for (std::size_t p = 0; p < l->size(); ++p) CHECK(l->cell_at(p) == lb.cell_at(p));
    }
}
