#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bing/straightener.hpp"
#include "bing/sampler.hpp"

#include <cmath>
#include <optional>

using namespace bing;

namespace {

bool in_domain_2d(const Rational& x, const Rational& y) {
    // D = ([0,1]x[1,2]) u [0,1]^2 u ([1,2]x[0,1])
    auto in = [](const Rational& v, long lo, long hi) { return v >= rat(lo) && v <= rat(hi); };
    return (in(x, 0, 1) && in(y, 1, 2)) || (in(x, 0, 1) && in(y, 0, 1)) ||
           (in(x, 1, 2) && in(y, 0, 1));
}

std::optional<std::array<Rational, 2>> eval2d(const std::vector<Piece2>& pieces, const Rational& x,
                                              const Rational& y) {
    for (const auto& p : pieces) {
        bool inside = true;
        for (const auto& h : p.hp)
            if (h[0] * x + h[1] * y > h[2]) { inside = false; break; }
        if (inside)
            return std::array<Rational, 2>{p.A[0] * x + p.A[1] * y + p.b[0],
                                           p.A[2] * x + p.A[3] * y + p.b[1]};
    }
    return std::nullopt;
}

// All pieces containing the point must agree (continuity across boundaries).
void check_consistent(const std::vector<Piece2>& pieces, const Rational& x, const Rational& y) {
    std::optional<std::array<Rational, 2>> seen;
    for (const auto& p : pieces) {
        bool inside = true;
        for (const auto& h : p.hp)
            if (h[0] * x + h[1] * y > h[2]) { inside = false; break; }
        if (!inside) continue;
        std::array<Rational, 2> v{p.A[0] * x + p.A[1] * y + p.b[0],
                                  p.A[2] * x + p.A[3] * y + p.b[1]};
        if (!seen) seen = v;
        else {
            CHECK(v[0] == (*seen)[0]);
            CHECK(v[1] == (*seen)[1]);
        }
    }
    CHECK(seen.has_value());
}

} // namespace

TEST_CASE("prototype vertex images match the reference") {
    auto p = straightener_pieces_2d(0);
    auto at = [&](long xn, long xd, long yn, long yd) {
        auto v = eval2d(p, rat(xn, xd), rat(yn, yd));
        REQUIRE(v.has_value());
        return *v;
    };
    CHECK(at(0, 1, 0, 1) == std::array<Rational, 2>{rat(1, 2), rat(0)});
    CHECK(at(1, 1, 1, 1) == std::array<Rational, 2>{rat(1, 2), rat(1)});
    CHECK(at(0, 1, 2, 1) == std::array<Rational, 2>{rat(-1), rat(0)});
    CHECK(at(1, 1, 2, 1) == std::array<Rational, 2>{rat(-1), rat(1)});
    // identity on {2} x [0,1]
    CHECK(at(2, 1, 1, 3) == std::array<Rational, 2>{rat(2), rat(1, 3)});
    CHECK(at(2, 1, 1, 1) == std::array<Rational, 2>{rat(2), rat(1)});
}

TEST_CASE("prototype bilipschitz constant is sqrt(3 + sqrt 5)") {
    double L = straightener_bilipschitz(0);
    double exact = std::sqrt(3.0 + std::sqrt(5.0)); // = 2.2882...
    CHECK(std::abs(L - exact) < 1e-9);
    CHECK(L == doctest::Approx(2.29).epsilon(0.01));
}

TEST_CASE("every depth: continuity, coverage, orientation, boundary trace") {
    for (int d = 0; d <= 2; ++d) {
        auto pieces = straightener_pieces_2d(d);
        // positive determinants
        for (const auto& p : pieces)
            CHECK((p.A[0] * p.A[3] - p.A[1] * p.A[2]).sign() > 0);
        // grid sweep: coverage of D and cross-piece consistency
        for (long i = 0; i <= 36; ++i)
            for (long j = 0; j <= 36; ++j) {
                Rational x = rat(i, 18), y = rat(j, 18);
                if (!in_domain_2d(x, y)) continue;
                check_consistent(pieces, x, y);
            }
        // far faces
        for (long j = 0; j <= 6; ++j) {
            Rational t = rat(j, 6);
            auto idv = eval2d(pieces, rat(2), t);
            REQUIRE(idv);
            CHECK((*idv) == std::array<Rational, 2>{rat(2), t});
            auto rot = eval2d(pieces, t, rat(2));
            REQUIRE(rot);
            CHECK((*rot) == std::array<Rational, 2>{rat(-1), t});
        }
        // the symmetry-plane slice (the corner-square diagonal) maps affinely
        for (long j = 0; j <= 8; ++j) {
            Rational t = rat(j, 8);
            auto v = eval2d(pieces, t, t);
            REQUIRE(v);
            CHECK((*v)[0] == rat(1, 2));
            CHECK((*v)[1] == t);
        }
    }
}

TEST_CASE("depth >= 1: arm strips are rigid") {
    auto pieces = straightener_pieces_2d(1);
    // H-strip [1,2] x [1/3,2/3] by the identity
    for (long i = 0; i <= 4; ++i)
        for (long j = 1; j <= 2; ++j) {
            Rational x = rat(4 + i, 4), y = rat(j, 3);
            auto v = eval2d(pieces, x, y);
            REQUIRE(v);
            CHECK((*v) == std::array<Rational, 2>{x, y});
        }
    // V-strip [1/3,2/3] x [1,2] by (x,y) -> (1-y, x)
    for (long i = 1; i <= 2; ++i)
        for (long j = 0; j <= 4; ++j) {
            Rational x = rat(i, 3), y = rat(4 + j, 4);
            auto v = eval2d(pieces, x, y);
            REQUIRE(v);
            CHECK((*v) == std::array<Rational, 2>{rat(1) - y, x});
        }
    // depth 1 inherits the prototype constant
    CHECK(straightener_bilipschitz(1) == doctest::Approx(std::sqrt(3 + std::sqrt(5.0))).epsilon(1e-9));
}

TEST_CASE("3d straightener on a world corner") {
    // corner cube [0,1]^3 with H-arm toward +x and V-arm toward +y
    CornerFrame fr;
    fr.corner_origin = Vec3::of(0, 0, 0);
    fr.side = rat(1);
    fr.to_prev = {1, 0, 0};
    fr.to_next = {0, 1, 0};
    auto phi = corner_straightener(fr, 1);
    // far face of the H-arm fixed
    CHECK(phi->evaluate(Vec3(rat(2), rat(1, 3), rat(1, 2))) == Vec3(rat(2), rat(1, 3), rat(1, 2)));
    // far face of the V-arm mapped isometrically onto {-1} x [0,1]
    Vec3 a(rat(1, 4), rat(2), rat(1, 2)), b(rat(3, 4), rat(2), rat(1, 2));
    Vec3 ia = phi->evaluate(a), ib = phi->evaluate(b);
    CHECK(ia.x == rat(-1));
    CHECK(ib.x == rat(-1));
    CHECK((ia - ib).y.abs() == rat(1, 2)); // distances preserved on the face
    CHECK_THROWS_AS(phi->evaluate(Vec3::of(5, 5, 5)), EvalError);

    // malformed L-shape rejected
    CornerFrame bad = fr;
    bad.to_next = {1, 0, 0};
    CHECK_THROWS(corner_straightener(bad, 1));
}

TEST_CASE("piece counts follow the recursion") {
    CHECK(straightener_pieces_2d(0).size() == 6);
    CHECK(straightener_pieces_2d(1).size() == 20);
    CHECK(straightener_pieces_2d(2).size() == 34);
}
