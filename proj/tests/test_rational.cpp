#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bing/rational.hpp"

#include <random>

using bing::Rational;
using bing::rat;

TEST_CASE("canonical form") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(rat(0, 7) == rat(0));
    CHECK(rat(1, 3).str() == "1/3");
    CHECK(rat(-1, 3).str() == "-1/3");
    CHECK(rat(5).str() == "5/1");
}

TEST_CASE("arithmetic") {
    CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
    CHECK(rat(1, 3) - rat(1, 2) == rat(-1, 6));
    CHECK(rat(2, 3) * rat(9, 4) == rat(3, 2));
    CHECK(rat(2, 3) / rat(4, 9) == rat(3, 2));
    CHECK_THROWS(rat(1, 2) / rat(0));
    CHECK(-rat(3, 7) == rat(-3, 7));
}

TEST_CASE("order and floor") {
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < rat(-1, 3));
    CHECK(rat(7, 2).floor() == rat(3));
    CHECK(rat(-7, 2).floor() == rat(-4));
    CHECK(rat(6, 3).floor() == rat(2));
    CHECK(rat(7, 2).floor_int64() == 3);
}

TEST_CASE("parsing") {
    CHECK(Rational::from_string("3/9") == rat(1, 3));
    CHECK(Rational::from_string("-12") == rat(-12));
    CHECK(Rational::from_decimal("1.5") == rat(3, 2));
    CHECK(Rational::from_decimal("-0.25") == rat(-1, 4));
    CHECK(Rational::from_decimal("2") == rat(2));
    CHECK_THROWS(Rational::from_string("abc"));
}

TEST_CASE("powers") {
    CHECK(rat(2, 3).pow_int(3) == rat(8, 27));
    CHECK(rat(2, 3).pow_int(-2) == rat(9, 4));
    CHECK(rat(5).pow_int(0) == rat(1));
}

TEST_CASE("randomized against int64 arithmetic") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int t = 0; t < 2000; ++t) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational x = rat(a, b), y = rat(c, d);
        CHECK((x + y) * rat(b * d) == rat(a * d + c * b));
        CHECK((x * y) * rat(b * d) == rat(a * c));
        CHECK((x < y) == (a * d < c * b));
    }
}
