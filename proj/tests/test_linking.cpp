#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bing/linking.hpp"
#include "bing/loop.hpp"

using namespace bing;

namespace {
std::vector<Vec3> rect_xy(long x0, long x1, long y0, long y1, long z) {
    return {Vec3::of(x0, y0, z), Vec3::of(x1, y0, z), Vec3::of(x1, y1, z), Vec3::of(x0, y1, z)};
}
std::vector<Vec3> rect_xz(long x0, long x1, long z0, long z1, long y) {
    return {Vec3::of(x0, y, z0), Vec3::of(x1, y, z0), Vec3::of(x1, y, z1), Vec3::of(x0, y, z1)};
}
} // namespace

TEST_CASE("separated rings are unlinked") {
    auto a = rect_xy(0, 4, 0, 4, 0);
    auto b = rect_xy(10, 14, 0, 4, 0);
    CHECK(linking_number(a, b) == 0);
    auto c = rect_xy(0, 4, 0, 4, 5);
    CHECK(linking_number(a, c) == 0);
}

TEST_CASE("Hopf-style rings link once") {
    // a in the z=0 plane around the origin; b in the y=0... b threads through a.
    auto a = rect_xy(-2, 2, -2, 2, 0);
    auto b = rect_xz(0, 6, -2, 2, 0); // passes through x in [0,6], z in [-2,2] at y=0
    long lk = linking_number(a, b);
    CHECK((lk == 1 || lk == -1));
    // reversing one curve flips the sign
    auto br = b;
    std::reverse(br.begin(), br.end());
    CHECK(linking_number(a, br) == -lk);
}

TEST_CASE("clasped staples with cancelling hooks are unlinked") {
    // two U-shapes hooked at both ends, closed far away: algebraically unlinked
    std::vector<Vec3> a = {Vec3::of(0, 0, 1),  Vec3::of(10, 0, 1), Vec3::of(10, 4, 1),
                           Vec3::of(0, 4, 1)};
    std::vector<Vec3> b = {Vec3::of(2, 2, 0),  Vec3::of(8, 2, 0),  Vec3::of(8, 2, 3),
                           Vec3::of(2, 2, 3)};
    long lk = linking_number(a, b);
    CHECK(lk == 0);
}
