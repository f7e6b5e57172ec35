#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bing/cube.hpp"

#include <algorithm>
#include <set>

using namespace bing;

namespace {
CubeCollection ring12() {
    // 4x4 planar outline, side 1: cells with x or y in {0,3}.
    std::vector<Int3> cells;
    for (std::int64_t x = 0; x < 4; ++x)
        for (std::int64_t y = 0; y < 4; ++y)
            if (x == 0 || x == 3 || y == 0 || y == 3) cells.push_back({x, y, 0});
    return CubeCollection(Rational(1), cells);
}
} // namespace

TEST_CASE("cube basics and lattice invariant") {
    Cube c(Vec3::of(2, -3, 0), Rational(1));
    CHECK(c.cell() == Int3{2, -3, 0});
    CHECK_THROWS(Cube(Vec3(rat(1, 2), rat(0), rat(0)), Rational(1)));
    Cube h(Vec3(rat(1, 2), rat(0), rat(0)), rat(1, 2));
    CHECK(h.cell() == Int3{1, 0, 0});
    CHECK(c.contains(Vec3::of(2, -3, 0)));
    CHECK(c.contains(Vec3(rat(3), rat(-2), rat(1))));
    CHECK(!c.strictly_contains(Vec3::of(2, -3, 0)));
}

TEST_CASE("adjacent") {
    Cube a(Vec3::of(0, 0, 0), Rational(1));
    CHECK(adjacent(a, Cube(Vec3::of(1, 0, 0), Rational(1))));
    CHECK(!adjacent(a, Cube(Vec3::of(1, 1, 0), Rational(1))));
    CHECK(!adjacent(a, Cube(Vec3::of(1, 0, 0), rat(1, 2))));
    // symmetric, anti-reflexive
    CHECK(adjacent(Cube(Vec3::of(1, 0, 0), Rational(1)), a));
    CHECK(!adjacent(a, a));
}

TEST_CASE("adjacency graph examples") {
    CubeCollection row(Rational(1), {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    auto g = adjacency_graph(row);
    CHECK(g.vertices == 3);
    CHECK(g.edges.size() == 2);
    CHECK(g.is_path());

    CubeCollection single(Rational(1), {{5, 5, 5}});
    auto g1 = adjacency_graph(single);
    CHECK(g1.vertices == 1);
    CHECK(g1.edges.empty());

    // 2x2x1 block: oracle enumerates all 6 pairs and counts face-sharing ones.
    CubeCollection blk = CubeCollection(Rational(1), {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    auto g2 = adjacency_graph(blk);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (adjacent(blk.cube(i), blk.cube(j))) ++expected;
    CHECK(expected == 4);
    CHECK(g2.edges.size() == expected);
    CHECK(g2.is_cycle());
}

TEST_CASE("classify") {
    CubeCollection row(Rational(1), {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    CHECK(classify(row, 1) == CubeRole::I);
    CHECK(classify(row, 0) == CubeRole::Terminal);
    CubeCollection ell(Rational(1), {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}});
    CHECK(classify(ell, 1) == CubeRole::Corner);
    CHECK_THROWS(classify(row, 7));
}

TEST_CASE("classify invariant under lattice isometries") {
    CubeCollection ell(Rational(1), {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}});
    auto transform = [](const Int3& c) { return Int3{-c.y + 4, c.z - 2, c.x}; };
    std::vector<Int3> cells;
    for (const auto& c : ell.cells()) cells.push_back(transform(c));
    CubeCollection moved(Rational(1), cells);
    for (std::size_t i = 0; i < 3; ++i) CHECK(classify(ell, i) == classify(moved, i));
}

TEST_CASE("cubical neighborhood") {
    CubeCollection row(Rational(1), {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    CHECK(cubical_neighborhood(row, 1).size() == 3);
    CubeCollection single(Rational(1), {{0, 0, 0}});
    CHECK(cubical_neighborhood(single, 0).size() == 1);

    // 12-ring: neighborhood of an I-cube next to a corner picks up the
    // across-the-diagonal cube that touches it only at an edge.
    auto r = ring12();
    auto i10 = *r.index_of({1, 0, 0});
    auto nb = cubical_neighborhood(r, i10);
    // oracle: brute force pairwise intersection test
    std::vector<std::size_t> oracle;
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r.cube(i10).intersects(r.cube(j))) oracle.push_back(j);
    std::sort(oracle.begin(), oracle.end());
    CHECK(nb == oracle);
    CHECK(nb.size() == 4);
    CHECK(std::count(nb.begin(), nb.end(), *r.index_of({0, 1, 0})) == 1);
}

TEST_CASE("symmetry planes") {
    CubeCollection row(Rational(1), {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    auto p = symmetry_plane(row, 1);
    // plane x = 3/2
    CHECK(p.contains(Vec3(rat(3, 2), rat(17), rat(-4))));
    CHECK(!p.contains(Vec3(rat(1), rat(0), rat(0))));

    CubeCollection ell(Rational(1), {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}});
    auto q = symmetry_plane(ell, 1);
    // plane x = y
    CHECK(q.contains(Vec3(rat(5), rat(5), rat(3))));
    CHECK(!q.contains(Vec3(rat(1), rat(0), rat(0))));

    CHECK_THROWS(symmetry_plane(row, 0)); // terminal

    // Center containment + reflection is a vertex bijection of |N|.
    for (auto& [coll, idx] : {std::pair<CubeCollection, std::size_t>{row, 1}, {ell, 1}}) {
        auto pl = symmetry_plane(coll, idx);
        CHECK(pl.contains(coll.cube(idx).center()));
        std::set<std::string> verts, refl;
        for (auto n : cubical_neighborhood(coll, idx))
            for (const auto& v : coll.cube(n).vertices()) {
                verts.insert(v.x.str() + "," + v.y.str() + "," + v.z.str());
                Vec3 w = pl.reflect(v);
                refl.insert(w.x.str() + "," + w.y.str() + "," + w.z.str());
            }
        CHECK(verts == refl);
    }
}

TEST_CASE("point membership tie-break") {
    auto r = ring12();
    // On the shared face between (0,0,0) and (1,0,0): lexicographically smallest wins.
    auto cell = r.cell_of_point(Vec3(rat(1), rat(1, 2), rat(1, 2)));
    REQUIRE(cell.has_value());
    CHECK(*cell == Int3{0, 0, 0});
    CHECK(!r.covers(Vec3(rat(3, 2), rat(3, 2), rat(1, 2)))); // hole interior
}
