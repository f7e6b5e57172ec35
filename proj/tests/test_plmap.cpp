#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bing/bilip.hpp"
#include "bing/plmap.hpp"
#include "bing/sampler.hpp"

using namespace bing;

TEST_CASE("empty chain is the identity") {
    PLMapChain chain;
    Vec3 x(rat(1), rat(2), rat(3));
    CHECK(chain.evaluate(x) == x);
    CHECK(chain.derivative_at(x) == Mat3::identity());
}

TEST_CASE("reflection primitive") {
    auto R = std::make_shared<AffinePrimitive>(Affine{reflect_matrix(), Vec3()});
    PLMapChain chain = PLMapChain::single(R);
    CHECK(chain.evaluate(Vec3::of(1, 2, 3)) == Vec3::of(-1, 2, 3));
    Mat3 d = chain.derivative_at(Vec3::of(1, 2, 3));
    CHECK(d == reflect_matrix());
    CHECK(d.det() == rat(-1));
}

TEST_CASE("affine then inverse is the identity") {
    Mat3 a = Mat3::zero();
    a.at(0, 1) = rat(2); a.at(1, 0) = rat(1); a.at(1, 2) = rat(-1, 3); a.at(2, 2) = rat(5);
    a.at(0, 0) = rat(1, 2);
    Affine f{a, Vec3(rat(1), rat(-2, 7), rat(0))};
    auto p = std::make_shared<AffinePrimitive>(f);
    PLMapChain chain({p, p->inverse()});
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Vec3 x(sample_unit_rational(rng), sample_unit_rational(rng), sample_unit_rational(rng));
        CHECK(chain.evaluate(x) == x);
    }
    // chain rule: derivative of [A, B] is B*A
    Mat3 b = Mat3::diag(rat(2), rat(3), rat(4));
    auto q = std::make_shared<AffinePrimitive>(Affine{b, Vec3()});
    PLMapChain two({p, q});
    CHECK(two.derivative_at(Vec3::of(0, 0, 0)) == b * a);
}

TEST_CASE("piecewise skeleton detection") {
    auto h = tame_shear();
    CHECK(h->evaluate(Vec3::of(1, 2, 0)) == Vec3::of(3, 2, 0));
    CHECK(h->evaluate(Vec3::of(1, -2, 0)) == Vec3::of(3, -2, 0));
    CHECK_THROWS_AS(h->derivative(Vec3::of(1, 0, 5)), SkeletonError);
    CHECK(h->derivative(Vec3::of(1, 1, 5)).at(0, 1) == rat(1));
}

TEST_CASE("tame example is an exact involution with the right fixed set") {
    PLMapChain f = tame_example();
    CHECK(f.evaluate(Vec3::of(1, 0, 0)) == Vec3::of(-1, 0, 0));
    SplitMix64 rng(99);
    for (int i = 0; i < 500; ++i) {
        Vec3 x(sample_unit_rational(rng) * rat(7) - rat(3),
               sample_unit_rational(rng) * rat(7) - rat(3),
               sample_unit_rational(rng) * rat(7) - rat(3));
        CHECK(f.evaluate(f.evaluate(x)) == x);
    }
    // fixed set is h({0} x R^2) = {(|x2|, x2, x3)}
    for (long k = -5; k <= 5; ++k) {
        Vec3 p(rat(k < 0 ? -k : k), rat(k), rat(3));
        CHECK(f.evaluate(p) == p);
    }
    // orientation: the derivative determinant is -1 almost everywhere
    CHECK(f.derivative_at(Vec3(rat(1, 7), rat(2, 7), rat(0))).det() == rat(-1));
    CHECK(f.derivative_at(Vec3(rat(1, 7), rat(-2, 7), rat(0))).det() == rat(-1));
}

TEST_CASE("chain inverse reverses and inverts") {
    Mat3 a = Mat3::diag(rat(2), rat(1), rat(1));
    Mat3 b = Mat3::diag(rat(1), rat(3), rat(1));
    Affine fa{a, Vec3::of(1, 0, 0)}, fb{b, Vec3::of(0, 1, 0)};
    PLMapChain chain({std::make_shared<AffinePrimitive>(fa), std::make_shared<AffinePrimitive>(fb)});
    PLMapChain round = chain.then(chain.inverse());
    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Vec3 x(sample_unit_rational(rng), sample_unit_rational(rng), sample_unit_rational(rng));
        CHECK(round.evaluate(x) == x);
    }
}

TEST_CASE("bilipschitz measurement: exact piece values and replayable witness") {
    // affine map: the exact constant is max(op(A), op(A^-1))
    Mat3 a = Mat3::diag(rat(2), rat(1), rat(1));
    std::vector<Piece> pieces{{ConvexCell{}, Affine{a, Vec3()}}};
    CHECK(pieces_bilipschitz(pieces) == doctest::Approx(2.0).epsilon(1e-12));
    Mat3 b = Mat3::diag(rat(1, 3), rat(1), rat(1));
    std::vector<Piece> p2{{ConvexCell{}, Affine{b, Vec3()}}};
    CHECK(pieces_bilipschitz(p2) == doctest::Approx(3.0).epsilon(1e-12));
    // identity measures 1 and the sampled witness replays exactly
    PLMapChain id;
    CubeCollection region(rat(1), {{0, 0, 0}, {1, 0, 0}});
    auto res = measure_bilipschitz(id, region, 500, 99);
    CHECK(res.constant == doctest::Approx(1.0).epsilon(1e-12));
    PLMapChain aff = PLMapChain::single(std::make_shared<AffinePrimitive>(Affine{a, Vec3()}));
    auto res2 = measure_bilipschitz(aff, region, 2000, 99);
    CHECK(res2.constant <= 2.0 + 1e-12);
    CHECK(res2.constant > 1.2);
    CHECK(replay_witness(aff, res2.witness) == doctest::Approx(res2.constant).epsilon(1e-12));
}
