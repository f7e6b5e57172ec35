#include "bing/loop.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace bing {

namespace {

std::vector<std::vector<std::size_t>> neighbors_of(const CubeCollection& c) {
    std::vector<std::vector<std::size_t>> nb(c.size());
    static const Int3 dirs[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& d : dirs) {
            auto j = c.index_of(c.cells()[i] + d);
            if (j) nb[i].push_back(*j);
        }
    return nb;
}

// Shared-cube test across corner neighborhoods.
std::optional<Violation> corner_neighborhoods_disjoint(const CubeCollection& c,
                                                       const std::vector<std::size_t>& corners) {
    std::unordered_map<std::size_t, std::size_t> owner;
    for (auto q : corners) {
        for (auto n : cubical_neighborhood(c, q)) {
            auto [it, fresh] = owner.emplace(n, q);
            if (!fresh && it->second != q) {
                return Violation{"corner-neighborhoods",
                                 "cubical neighborhoods of two corners share a cube",
                                 {c.cells()[it->second], c.cells()[q], c.cells()[n]}};
            }
        }
    }
    return std::nullopt;
}

// Boundary faces of a cube union: (cell, axis, +/-) with missing neighbor.
struct BoundaryFace {
    Vec3 lo, hi; // axis-aligned rectangle, degenerate in one axis
};

std::vector<BoundaryFace> boundary_faces_near(const CubeCollection& c, const Int3& center_cell) {
    std::vector<BoundaryFace> out;
    static const Int3 dirs[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy)
            for (std::int64_t dz = -1; dz <= 1; ++dz) {
                Int3 b = center_cell + Int3{dx, dy, dz};
                auto bi = c.index_of(b);
                if (!bi) continue;
                Cube q = c.cube(*bi);
                for (const auto& d : dirs) {
                    if (c.contains_cell(b + d)) continue;
                    Vec3 lo = q.origin, hi = q.origin + Vec3(q.side, q.side, q.side);
                    for (int ax = 0; ax < 3; ++ax) {
                        if (d[ax] > 0) lo[ax] = hi[ax];
                        if (d[ax] < 0) hi[ax] = lo[ax];
                    }
                    out.push_back({lo, hi});
                }
            }
    return out;
}

Rational box_dist2(const Vec3& alo, const Vec3& ahi, const Vec3& blo, const Vec3& bhi) {
    Rational d2(0);
    for (int ax = 0; ax < 3; ++ax) {
        Rational gap(0);
        if (bhi[ax] < alo[ax]) gap = alo[ax] - bhi[ax];
        else if (ahi[ax] < blo[ax]) gap = blo[ax] - ahi[ax];
        d2 += gap * gap;
    }
    return d2;
}

bool boxes_touch(const Vec3& alo, const Vec3& ahi, const Vec3& blo, const Vec3& bhi) {
    return box_dist2(alo, ahi, blo, bhi).sign() == 0;
}

SymmetryPlane normalized(SymmetryPlane p) {
    for (int ax = 0; ax < 3; ++ax) {
        int s = p.n[ax].sign();
        if (s == 0) continue;
        if (s < 0) {
            p.n = Vec3(-p.n.x, -p.n.y, -p.n.z);
            p.off = -p.off;
        }
        break;
    }
    return p;
}

} // namespace

std::vector<std::size_t> CubicalLoop::corner_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < order_.size(); ++p)
        if (classify(coll_, order_[p]) == CubeRole::Corner) out.push_back(p);
    return out;
}

bool CubicalLoop::is_model_loop() const { return corner_positions().size() == 4; }

bool CubicalLoop::is_planar_slab() const {
    for (int ax = 0; ax < 3; ++ax) {
        bool same = true;
        for (const auto& c : coll_.cells())
            if (c[ax] != coll_.cells()[0][ax]) { same = false; break; }
        if (same) return true;
    }
    return false;
}

CubeRole CubicalLoop::role_at(std::size_t pos) const {
    return classify(coll_, order_[pos % order_.size()]);
}

Validated<CubicalLoop> CubicalLoop::validate(const CubeCollection& c) {
    if (c.size() < 4)
        return Violation{"cycle", "too few cubes for a loop", c.cells()};
    auto nb = neighbors_of(c);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (nb[i].size() != 2)
            return Violation{"valence", "cube is not an I-cube or corner (wrong valence)",
                             {c.cells()[i]}};
    // Walk the cycle.
    std::vector<std::size_t> order;
    order.reserve(c.size());
    std::vector<char> seen(c.size(), 0);
    std::size_t cur = 0, prev = c.size();
    while (true) {
        order.push_back(cur);
        seen[cur] = 1;
        std::size_t nxt = (nb[cur][0] != prev || nb[cur].size() < 2) ? nb[cur][0] : nb[cur][1];
        if (nb[cur][0] == prev) nxt = nb[cur][1];
        if (seen[nxt]) break;
        prev = cur;
        cur = nxt;
    }
    if (order.size() != c.size())
        return Violation{"cycle", "adjacency graph is not a single cycle", {}};
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (classify(c, i) == CubeRole::Corner) corners.push_back(i);
    if (auto v = corner_neighborhoods_disjoint(c, corners)) return *v;
    CubicalLoop l;
    l.coll_ = c;
    l.order_ = std::move(order);
    return l;
}

Validated<CubicalLoop> CubicalLoop::validate_ordered(const CubeCollection& c) {
    auto v = validate(c);
    if (!ok(v)) return v;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int3 d = c.cells()[(i + 1) % c.size()] - c.cells()[i];
        if (std::abs(d.x) + std::abs(d.y) + std::abs(d.z) != 1)
            return Violation{"cycle", "stored order is not a cyclic walk", {c.cells()[i]}};
    }
    CubicalLoop l = get_value(v);
    for (std::size_t i = 0; i < c.size(); ++i) l.order_[i] = i;
    return l;
}

bool CubicalArc::is_segment() const {
    for (std::size_t i = 0; i < coll_.size(); ++i)
        if (classify(coll_, i) == CubeRole::Corner) return false;
    return true;
}

CubeRole CubicalArc::role_at(std::size_t pos) const { return classify(coll_, order_.at(pos)); }

Validated<CubicalArc> CubicalArc::validate(const CubeCollection& c) {
    if (c.size() < 2)
        return Violation{"terminals", "too few cubes for an arc", c.cells()};
    auto nb = neighbors_of(c);
    std::vector<std::size_t> terminals;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (nb[i].size() == 1) terminals.push_back(i);
        else if (nb[i].size() != 2)
            return Violation{"valence", "interior cube is not an I-cube or corner",
                             {c.cells()[i]}};
    }
    if (terminals.size() != 2)
        return Violation{"terminals", "arc must have exactly two terminal cubes", c.cells()};
    std::vector<std::size_t> order;
    order.reserve(c.size());
    std::size_t cur = terminals[0], prev = c.size();
    while (true) {
        order.push_back(cur);
        if (nb[cur].size() == 1 && order.size() > 1) break;
        std::size_t nxt = nb[cur][0] == prev ? (nb[cur].size() > 1 ? nb[cur][1] : nb[cur][0])
                                             : nb[cur][0];
        prev = cur;
        cur = nxt;
        if (order.size() > c.size()) break;
    }
    if (order.size() != c.size())
        return Violation{"path", "adjacency graph is not a single path", {}};
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (classify(c, i) == CubeRole::Corner) corners.push_back(i);
    if (auto v = corner_neighborhoods_disjoint(c, corners)) return *v;
    CubicalArc a;
    a.coll_ = c;
    a.order_ = std::move(order);
    return a;
}

namespace {
template <typename Seq>
std::vector<IBlock> blocks_from(const Seq& s, std::size_t n, bool cyclic) {
    std::vector<char> is_i(n, 0);
    for (std::size_t p = 0; p < n; ++p) is_i[p] = s.role_at(p) == CubeRole::I;
    std::vector<IBlock> out;
    std::size_t start = 0;
    if (cyclic) {
        // Rotate so position 0 is not inside a run.
        bool all_i = true;
        for (std::size_t p = 0; p < n; ++p)
            if (!is_i[p]) { start = (p + 1) % n; all_i = false; break; }
        if (all_i) {
            IBlock b;
            for (std::size_t p = 0; p < n; ++p) b.positions.push_back(p);
            b.reduced_positions.assign(b.positions.begin() + 1, b.positions.end() - 1);
            return {b};
        }
    }
    std::size_t p = start, visited = 0;
    while (visited < n) {
        if (is_i[p]) {
            IBlock b;
            while (visited < n && is_i[p]) {
                b.positions.push_back(p);
                p = cyclic ? (p + 1) % n : p + 1;
                ++visited;
            }
            if (b.positions.size() > 2)
                b.reduced_positions.assign(b.positions.begin() + 1, b.positions.end() - 1);
            out.push_back(std::move(b));
        } else {
            p = cyclic ? (p + 1) % n : p + 1;
            ++visited;
        }
    }
    return out;
}
} // namespace

std::vector<IBlock> i_blocks(const CubicalLoop& l) { return blocks_from(l, l.size(), true); }
std::vector<IBlock> i_blocks(const CubicalArc& a) { return blocks_from(a, a.size(), false); }

Rational dist2_to_boundary(const CubicalLoop& outer, const CubicalLoop& inner) {
    const auto& oc = outer.collection();
    const auto& ic = inner.collection();
    Rational best(-1);
    for (std::size_t i = 0; i < ic.size(); ++i) {
        Cube q = ic.cube(i);
        Vec3 qlo = q.origin, qhi = q.origin + Vec3(q.side, q.side, q.side);
        auto host = oc.cell_of_point(q.center());
        if (!host) continue;
        for (const auto& f : boundary_faces_near(oc, *host)) {
            Rational d2 = box_dist2(qlo, qhi, f.lo, f.hi);
            if (best.sign() < 0 || d2 < best) best = d2;
        }
    }
    return best;
}

namespace {

// Unique outer cube containing the given inner cube, if any.
std::optional<std::size_t> containing_cube(const CubeCollection& outer, const Cube& q) {
    auto host = outer.cell_of_point(q.center());
    if (!host) return std::nullopt;
    auto idx = outer.index_of(*host);
    Cube o = outer.cube(*idx);
    for (int ax = 0; ax < 3; ++ax) {
        if (q.origin[ax] < o.origin[ax]) return std::nullopt;
        if (q.origin[ax] + q.side > o.origin[ax] + o.side) return std::nullopt;
    }
    return idx;
}

std::optional<Violation> check_interior(const CubeCollection& outer, const CubeCollection& inner,
                                        const char* cond) {
    for (std::size_t i = 0; i < inner.size(); ++i) {
        Cube q = inner.cube(i);
        auto host = outer.cell_of_point(q.center());
        if (!host)
            return Violation{cond, "inner cube not covered by the outer union", {inner.cells()[i]}};
        Vec3 qlo = q.origin, qhi = q.origin + Vec3(q.side, q.side, q.side);
        for (const auto& f : boundary_faces_near(outer, *host))
            if (boxes_touch(qlo, qhi, f.lo, f.hi))
                return Violation{cond, "inner cube touches the boundary of the outer union",
                                 {inner.cells()[i]}};
    }
    return std::nullopt;
}

} // namespace

Validated<NestedPair> validate_nested_pair(const CubicalLoop& outer, const CubicalLoop& inner,
                                           bool require_uniform) {
    const auto& oc = outer.collection();
    const auto& ic = inner.collection();

    // Inclusion map on cyclic positions.
    std::vector<std::size_t> incl(inner.size());
    for (std::size_t p = 0; p < inner.size(); ++p) {
        auto idx = containing_cube(oc, inner.cube_at(p));
        if (!idx)
            return Violation{"inclusion", "inner cube not contained in a single outer cube",
                             {inner.cell_at(p)}};
        auto it = std::find(outer.order().begin(), outer.order().end(), *idx);
        incl[p] = static_cast<std::size_t>(it - outer.order().begin());
    }

    if (auto v = check_interior(oc, ic, "condition-1")) return *v;

    for (std::size_t p = 0; p < inner.size(); ++p) {
        CubeRole orole = outer.role_at(incl[p]);
        CubeRole irole = inner.role_at(p);
        if (orole == CubeRole::I && irole != CubeRole::I)
            return Violation{"condition-2", "I-cube of the outer loop contains a non-I inner cube",
                             {inner.cell_at(p)}};
    }

    auto ocorners = outer.corner_positions();
    std::unordered_map<std::size_t, std::vector<std::size_t>> per_corner;
    for (std::size_t p = 0; p < inner.size(); ++p)
        if (inner.role_at(p) == CubeRole::Corner) per_corner[incl[p]].push_back(p);
    for (auto cpos : ocorners) {
        auto it = per_corner.find(cpos);
        std::size_t cnt = it == per_corner.end() ? 0 : it->second.size();
        if (cnt != 1)
            return Violation{"condition-3",
                             "outer corner must contain exactly one inner corner (found " +
                                 std::to_string(cnt) + ")",
                             {outer.cell_at(cpos)}};
    }
    for (auto& [cpos, list] : per_corner)
        if (outer.role_at(cpos) != CubeRole::Corner)
            return Violation{"condition-3", "inner corner lies in a non-corner outer cube",
                             {inner.cell_at(list.front())}};

    for (auto cpos : ocorners) {
        std::size_t ip = per_corner[cpos].front();
        auto po = normalized(symmetry_plane(oc, outer.order()[cpos]));
        auto pi = normalized(symmetry_plane(ic, inner.order()[ip]));
        if (!(po == pi))
            return Violation{"condition-4", "outer corner and its inner corner have different symmetry planes",
                             {outer.cell_at(cpos), inner.cell_at(ip)}};
    }

    // Orientation: re-walk inner order so the induced outer tour is positive.
    NestedPair np;
    np.outer = outer;
    np.inner = inner;
    np.inclusion = incl;

    if (require_uniform) {
        Rational d2 = dist2_to_boundary(outer, inner);
        Rational s2 = ic.side() * ic.side();
        if (d2 < s2)
            return Violation{"uniform", "dist(|L'|, boundary |L|) < side(L')", {}};
        np.uniform = true;
    }
    return np;
}

Validated<Splitting> split_loop(const CubicalLoop& l, const Int3& t1, const Int3& t2) {
    auto i1 = l.collection().index_of(t1);
    auto i2 = l.collection().index_of(t2);
    if (!i1 || !i2)
        return Violation{"terminals", "terminal cube not in the loop", {t1, t2}};
    if (*i1 == *i2)
        return Violation{"terminals", "terminal cubes coincide", {t1}};
    if (linf(t2 - t1) <= 1)
        return Violation{"terminals", "terminal cubes adjacent or in each other's neighborhood",
                         {t1, t2}};
    std::size_t p1 = 0, p2 = 0;
    for (std::size_t p = 0; p < l.size(); ++p) {
        if (l.order()[p] == *i1) p1 = p;
        if (l.order()[p] == *i2) p2 = p;
    }
    auto build = [&](std::size_t from, std::size_t to) -> Validated<CubicalArc> {
        std::vector<Int3> cells;
        for (std::size_t p = from;; p = (p + 1) % l.size()) {
            cells.push_back(l.cell_at(p));
            if (p == to) break;
        }
        return CubicalArc::validate(CubeCollection(l.side(), std::move(cells)));
    };
    auto plus = build(p1, p2);
    if (!ok(plus)) return get_violation(plus);
    auto minus = build(p2, p1);
    if (!ok(minus)) return get_violation(minus);
    return Splitting{get_value(plus), get_value(minus), t1, t2};
}

Validated<std::monostate> validate_proper_nesting(const CubicalArc& arc, const CubicalLoop& inner) {
    const auto& ac = arc.collection();
    const auto& ic = inner.collection();

    std::vector<std::size_t> incl(inner.size());
    for (std::size_t p = 0; p < inner.size(); ++p) {
        auto idx = containing_cube(ac, inner.cube_at(p));
        if (!idx)
            return Violation{"inclusion", "inner cube not contained in a single arc cube",
                             {inner.cell_at(p)}};
        incl[p] = *idx;
    }

    if (auto v = check_interior(ac, ic, "condition-1")) return *v;

    std::unordered_map<std::size_t, std::vector<std::size_t>> corners_in; // arc idx -> inner corner positions
    for (std::size_t p = 0; p < inner.size(); ++p)
        if (inner.role_at(p) == CubeRole::Corner) corners_in[incl[p]].push_back(p);

    for (std::size_t q = 0; q < ac.size(); ++q) {
        CubeRole role = classify(ac, q);
        std::size_t cnt = corners_in.count(q) ? corners_in[q].size() : 0;
        if (role == CubeRole::I) {
            if (cnt != 0)
                return Violation{"condition-2", "I-cube of the arc contains an inner corner",
                                 {ac.cells()[q]}};
        } else if (role == CubeRole::Terminal) {
            if (cnt != 2)
                return Violation{"condition-3",
                                 "terminal cube must contain exactly two inner corners (found " +
                                     std::to_string(cnt) + ")",
                                 {ac.cells()[q]}};
        } else if (role == CubeRole::Corner) {
            if (cnt != 2)
                return Violation{"condition-4",
                                 "arc corner must contain exactly two inner corners (found " +
                                     std::to_string(cnt) + ")",
                                 {ac.cells()[q]}};
            auto pa = normalized(symmetry_plane(ac, q));
            for (auto ip : corners_in[q]) {
                auto pi = normalized(symmetry_plane(ic, inner.order()[ip]));
                if (!(pa == pi))
                    return Violation{"condition-4",
                                     "arc corner and inner corners do not share a symmetry plane",
                                     {ac.cells()[q], inner.cell_at(ip)}};
            }
        }
    }
    return std::monostate{};
}

Rotation induced_rotation(const NestedPair& p, std::int64_t k) {
    return Rotation{p.inner.size(), k};
}

CubicalLoop middle_third_ring(const CubicalLoop& l) {
    const std::size_t n = l.size();
    std::vector<Int3> cells;
    cells.reserve(3 * n);
    for (std::size_t p = 0; p < n; ++p) {
        Int3 me = l.cell_at(p);
        Int3 prv = l.cell_at((p + n - 1) % n);
        Int3 nxt = l.cell_at((p + 1) % n);
        Int3 center = me * 3 + Int3{1, 1, 1};
        Int3 dprev = prv - me, dnext = nxt - me;
        cells.push_back(center + dprev);
        cells.push_back(center);
        cells.push_back(center + dnext);
    }
    Rational third = l.side() / Rational(3);
    auto v = CubicalLoop::validate(CubeCollection(third, std::move(cells)));
    if (!ok(v)) throw std::logic_error("middle_third_ring: construction failed validation");
    return get_value(v);
}

} // namespace bing
