#include "bing/bing_template.hpp"

#include <algorithm>
#include <stdexcept>

namespace bing {

namespace {

int axis_of(const Int3& d) {
    if (d.x != 0) return 0;
    if (d.y != 0) return 1;
    return 2;
}

void push_checked(std::vector<Int3>& cells, const Int3& c) {
    if (!cells.empty() && linf(c - cells.back()) != 0) {
        Int3 d = c - cells.back();
        if (std::abs(d.x) + std::abs(d.y) + std::abs(d.z) != 1)
            throw std::logic_error("racetrack: emitted cells not face-adjacent");
    }
    cells.push_back(c);
}

// One strand traced through the interior cubes of the arc (positions
// 1..a-2). Returns the cells visited and the entry cell into the far
// terminal together with the direction of travel there.
struct StrandEnd {
    std::vector<Int3> cells;
    Int3 entry_into_t2;
    Int3 dir_at_t2;
};

StrandEnd trace_strand(const CubicalArc& arc, long m, const Int3& start_cell) {
    const std::size_t a = arc.size();
    StrandEnd out;
    Int3 cur = start_cell;
    Int3 dir = arc.cell_at(1) - arc.cell_at(0);
    for (std::size_t i = 1; i + 1 < a; ++i) {
        Int3 base = arc.cell_at(i) * m;
        Int3 next_dir = arc.cell_at(i + 1) - arc.cell_at(i);
        if (next_dir == dir) {
            for (long s = 0; s < m; ++s) {
                push_checked(out.cells, cur);
                cur = cur + dir;
            }
            continue;
        }
        // corner cube: reflect the entry ray across the symmetry plane
        Int3 lc = cur - base;
        int al = axis_of(dir), be = axis_of(next_dir);
        long s1 = -(dir[al]);      // arm toward the previous cube
        long s2 = next_dir[be];    // arm toward the next cube
        long prod = s1 * s2;
        long turn_alpha = prod > 0 ? lc[be] : m - 1 - lc[be];
        // travel along dir to the turn cell
        long steps_in = (turn_alpha - lc[al]) * dir[al];
        if (steps_in < 0 || steps_in >= m)
            throw std::logic_error("racetrack: turn cell out of range");
        for (long s = 0; s <= steps_in; ++s) {
            push_checked(out.cells, cur);
            if (s < steps_in) cur = cur + dir;
        }
        // exit along next_dir to the face
        long exit_boundary = next_dir[be] > 0 ? m - 1 : 0;
        Int3 lcur = cur - base;
        long steps_out = (exit_boundary - lcur[be]) * next_dir[be];
        if (steps_out < 0 || steps_out >= m)
            throw std::logic_error("racetrack: exit run out of range");
        for (long s = 0; s < steps_out; ++s) {
            cur = cur + next_dir;
            push_checked(out.cells, cur);
        }
        cur = cur + next_dir;
        dir = next_dir;
    }
    out.entry_into_t2 = cur;
    out.dir_at_t2 = dir;
    return out;
}

} // namespace

Racetrack make_racetrack(const CubicalArc& arc, long m, int crossbar_axis_t1,
                         long crossbar_depth) {
    if (m < 7 || m % 2 == 0) throw std::invalid_argument("racetrack: need odd m >= 7");
    if (arc.size() < 3) throw std::invalid_argument("racetrack: arc too short");
    if (crossbar_depth < 1 || crossbar_depth > m - 2)
        throw std::invalid_argument("racetrack: crossbar depth out of range");
    const long c = (m - 1) / 2;
    const Int3 t1 = arc.cell_at(0), t2 = arc.cell_at(arc.size() - 1);
    const Int3 d0 = arc.cell_at(1) - t1;
    const int u1 = axis_of(d0);
    if (crossbar_axis_t1 == u1 || crossbar_axis_t1 < 0 || crossbar_axis_t1 > 2)
        throw std::invalid_argument("racetrack: crossbar axis must be transverse");
    const int v1 = crossbar_axis_t1;
    const int w1 = 3 - u1 - v1;

    const Int3 base1 = t1 * m;
    // t1 elbow geometry
    long exit_local1 = d0[u1] > 0 ? m - 1 : 0;
    long cross_local1 = d0[u1] > 0 ? m - 1 - crossbar_depth : crossbar_depth;
    long leg_step1 = d0[u1] > 0 ? 1 : -1;

    auto t1_cell = [&](long vu, long vv, long vw) {
        Int3 p = base1;
        p[u1] += vu;
        p[v1] += vv;
        p[w1] += vw;
        return p;
    };

    // strand start cells just inside arc cube 1
    Int3 cube1_base = arc.cell_at(1) * m;
    auto strand_start = [&](long vv) {
        Int3 p = cube1_base;
        p[u1] = cube1_base[u1] + (d0[u1] > 0 ? 0 : m - 1);
        p[v1] = base1[v1] + vv;
        p[w1] = base1[w1] + c;
        return p;
    };

    StrandEnd hi = trace_strand(arc, m, strand_start(m - 2));
    StrandEnd lo = trace_strand(arc, m, strand_start(1));

    // t2 elbow: the arrival coordinates force the crossbar axis there.
    const Int3 base2 = t2 * m;
    const Int3 din2 = hi.dir_at_t2;
    const int u2 = axis_of(din2);
    if (!(lo.dir_at_t2 == din2)) throw std::logic_error("racetrack: strands arrive differently");
    Int3 lhi = hi.entry_into_t2 - base2, llo = lo.entry_into_t2 - base2;
    int v2 = -1;
    for (int ax = 0; ax < 3; ++ax) {
        if (ax == u2) continue;
        if (lhi[ax] != llo[ax]) {
            if (v2 != -1) throw std::logic_error("racetrack: arrivals differ in two axes");
            v2 = ax;
        }
    }
    if (v2 == -1) throw std::logic_error("racetrack: strands arrive at the same lane");
    int w2 = 3 - u2 - v2;
    {
        std::vector<long> offs{lhi[v2], llo[v2]};
        std::sort(offs.begin(), offs.end());
        if (offs[0] != 1 || offs[1] != m - 2 || lhi[w2] != c)
            throw std::logic_error("racetrack: arrival offsets off pattern");
    }
    long entry_local2 = lhi[u2];
    long cross_local2 = din2[u2] > 0 ? entry_local2 + crossbar_depth
                                     : entry_local2 - crossbar_depth;
    if (cross_local2 < 1 || cross_local2 > m - 2)
        throw std::logic_error("racetrack: t2 crossbar out of range");
    long leg_step2 = din2[u2] > 0 ? 1 : -1;
    auto t2_cell = [&](long vu, long vv, long vw) {
        Int3 p = base2;
        p[u2] += vu;
        p[v2] += vv;
        p[w2] += vw;
        return p;
    };

    // assemble the cyclic cell path
    std::vector<Int3> cells;
    // t1 crossbar, lo corner to hi corner
    for (long v = 1; v <= m - 2; ++v) push_checked(cells, t1_cell(cross_local1, v, c));
    // t1 leg at hi offset, out to the arc face
    for (long u = cross_local1 + leg_step1; u != exit_local1 + leg_step1; u += leg_step1)
        push_checked(cells, t1_cell(u, m - 2, c));
    // strand hi
    for (const auto& q : hi.cells) push_checked(cells, q);
    // t2 leg from the hi arrival down to the crossbar (exclusive)
    for (long u = entry_local2; u != cross_local2; u += leg_step2) {
        Int3 p = base2;
        p[u2] += u;
        p[v2] = hi.entry_into_t2[v2];
        p[w2] = hi.entry_into_t2[w2];
        push_checked(cells, p);
    }
    // t2 crossbar from the hi corner to the lo corner
    {
        long from = lhi[v2], to = llo[v2];
        long st = from < to ? 1 : -1;
        for (long v = from; v != to + st; v += st)
            push_checked(cells, t2_cell(cross_local2, v, c));
    }
    // t2 leg back toward the entry face at the lo arrival (crossbar exclusive)
    for (long u = cross_local2 - leg_step2; u != entry_local2 - leg_step2; u -= leg_step2) {
        Int3 p = base2;
        p[u2] += u;
        p[v2] = lo.entry_into_t2[v2];
        p[w2] = lo.entry_into_t2[w2];
        push_checked(cells, p);
    }
    // strand lo reversed
    for (auto it = lo.cells.rbegin(); it != lo.cells.rend(); ++it) push_checked(cells, *it);
    // t1 leg at lo offset, back down to the crossbar (exclusive)
    for (long u = exit_local1; u != cross_local1; u -= leg_step1)
        push_checked(cells, t1_cell(u, 1, c));
    // closed: last cell adjacent to the first
    if (linf(cells.back() - cells.front()) != 1 ||
        std::abs((cells.back() - cells.front()).x) + std::abs((cells.back() - cells.front()).y) +
                std::abs((cells.back() - cells.front()).z) != 1)
        throw std::logic_error("racetrack: path does not close");

    Rational child_side = arc.side() / Rational(m);
    auto v = CubicalLoop::validate(CubeCollection(child_side, cells));
    if (!ok(v))
        throw std::logic_error("racetrack: invalid loop (" + get_violation(v).condition + ": " +
                               get_violation(v).detail + ")");
    Racetrack out;
    out.loop = get_value(v);
    out.mid_t1 = t1_cell(cross_local1, c, c);
    out.mid_t2 = t2_cell(cross_local2, c, c);
    out.axis_t1 = v1;
    out.axis_t2 = v2;
    return out;
}

ClaspPair clasped_children(const Splitting& split, long m) {
    const Int3 d_plus = split.plus.cell_at(1) - split.plus.cell_at(0);
    const Int3 d_minus_end = split.minus.cell_at(split.minus.size() - 1) -
                             split.minus.cell_at(split.minus.size() - 2);
    (void)d_minus_end;
    int u = axis_of(d_plus);
    int axes[2] = {u == 0 ? 1 : 0, u == 2 ? 1 : 2};
    if (axes[0] == axes[1]) axes[1] = 3 - u - axes[0];
    // enumerate start-axis assignments until both terminals stay perpendicular
    for (int pa = 0; pa < 2; ++pa)
        for (int ma = 0; ma < 2; ++ma) {
            int plus_axis = axes[pa];
            // the minus arc starts at split.t2; its admissible start axes are
            // the transverse axes there
            Int3 dm = split.minus.cell_at(1) - split.minus.cell_at(0);
            int um = axis_of(dm);
            int maxes[2] = {um == 0 ? 1 : 0, um == 2 ? 1 : 2};
            if (maxes[0] == maxes[1]) maxes[1] = 3 - um - maxes[0];
            int minus_axis = maxes[ma];
            Racetrack plus, minus;
            try {
                plus = make_racetrack(split.plus, m, plus_axis, m - 2);
                minus = make_racetrack(split.minus, m, minus_axis, 3);
            } catch (const std::logic_error&) {
                continue;
            }
            // perpendicular elbow planes at both shared terminals
            if (plus.axis_t1 == minus.axis_t2) continue; // both at split.t1
            if (plus.axis_t2 == minus.axis_t1) continue; // both at split.t2
            return {plus, minus};
        }
    throw std::logic_error("clasped_children: no perpendicular elbow assignment found");
}

Racetrack parallel_child(const CubicalArc& arc, long m) {
    const Int3 d0 = arc.cell_at(1) - arc.cell_at(0);
    int u = axis_of(d0);
    int vax = u == 0 ? 1 : 0;
    return make_racetrack(arc, m, vax, (m - 5) / 2);
}

CubicalLoop map_loop(InvolutionChoice c, const CubicalLoop& l) {
    std::vector<Int3> cells;
    cells.reserve(l.size());
    for (std::size_t p = 0; p < l.size(); ++p) cells.push_back(involution_cell(c, l.cell_at(p)));
    auto v = CubicalLoop::validate(CubeCollection(l.side(), std::move(cells)));
    if (!ok(v)) throw std::logic_error("map_loop: image fails validation");
    return get_value(v);
}

CubicalLoop root_loop(const Rational& r0) {
    std::vector<Int3> cells;
    for (std::int64_t x = -3; x <= 2; ++x)
        for (std::int64_t y = -2; y <= 1; ++y)
            if (x == -3 || x == 2 || y == -2 || y == 1) cells.push_back({x, y, 0});
    auto v = CubicalLoop::validate(CubeCollection(r0, std::move(cells)));
    if (!ok(v)) throw std::logic_error("root_loop: invalid");
    return get_value(v);
}

std::pair<Int3, Int3> root_terminals(InvolutionChoice c) {
    Int3 t1{-8, 0, 1};
    return {t1, involution_cell(c, t1)};
}

} // namespace bing
