#include "bing/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace bing {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t f) {
    return a >= 0 ? a / f : -((-a + f - 1) / f);
}

Int3 parent_cell(const Int3& q, long f) {
    return {floor_div(q.x, f), floor_div(q.y, f), floor_div(q.z, f)};
}

// Closed child cube [q, q+1] against the boundary of the parent union; f is
// the number of child cells per parent cell. All arithmetic in int64.
bool touches_parent_boundary(const Int3& q, long f, const CubeCollection& parents) {
    Int3 base = parent_cell(q, f);
    static const Int3 dirs[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy)
            for (std::int64_t dz = -1; dz <= 1; ++dz) {
                Int3 pc = base + Int3{dx, dy, dz};
                if (!parents.contains_cell(pc)) continue;
                for (const auto& d : dirs) {
                    if (parents.contains_cell(pc + d)) continue;
                    Int3 flo = pc * f, fhi = pc * f + Int3{f, f, f};
                    for (int ax = 0; ax < 3; ++ax) {
                        if (d[ax] > 0) flo[ax] = fhi[ax];
                        if (d[ax] < 0) fhi[ax] = flo[ax];
                    }
                    bool touch = true;
                    for (int ax = 0; ax < 3; ++ax)
                        if (flo[ax] > q[ax] + 1 || fhi[ax] < q[ax]) { touch = false; break; }
                    if (touch) return true;
                }
            }
    return false;
}

// Exact min squared distance (child-lattice units) from the child cube set to
// the parent union boundary. Only reliable below f^2, which covers the checks
// used here (the middle-third distance equals exactly (f/3)^2 < f^2).
std::int64_t min_dist2_to_parent_boundary(const std::vector<Int3>& child_cells, long f,
                                          const CubeCollection& parents) {
    std::int64_t best = -1;
    static const Int3 dirs[6] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (const auto& q : child_cells) {
        Int3 base = parent_cell(q, f);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                for (std::int64_t dz = -1; dz <= 1; ++dz) {
                    Int3 pc = base + Int3{dx, dy, dz};
                    if (!parents.contains_cell(pc)) continue;
                    for (const auto& d : dirs) {
                        if (parents.contains_cell(pc + d)) continue;
                        Int3 flo = pc * f, fhi = pc * f + Int3{f, f, f};
                        for (int ax = 0; ax < 3; ++ax) {
                            if (d[ax] > 0) flo[ax] = fhi[ax];
                            if (d[ax] < 0) fhi[ax] = flo[ax];
                        }
                        std::int64_t d2 = 0;
                        for (int ax = 0; ax < 3; ++ax) {
                            std::int64_t gap = 0;
                            if (fhi[ax] < q[ax]) gap = q[ax] - fhi[ax];
                            else if (q[ax] + 1 < flo[ax]) gap = flo[ax] - (q[ax] + 1);
                            d2 += gap * gap;
                        }
                        if (best < 0 || d2 < best) best = d2;
                    }
                }
    }
    return best;
}

} // namespace

std::string flip_word(const std::string& w) {
    std::string out = w;
    for (char& ch : out) ch = ch == '+' ? '-' : '+';
    return out;
}

std::vector<std::string> DefiningSequence::words_at(int k) const {
    std::vector<std::string> out;
    for (const auto& [w, l] : loops)
        if (static_cast<int>(w.size()) == k) out.push_back(w);
    return out;
}

bool DefiningSequence::level_contains(int k, const Vec3& x) const {
    return level_union(k).covers(x);
}

int DefiningSequence::level_of(const Vec3& x) const {
    int best = -1;
    for (int k = 0; k <= K; ++k) {
        if (!level_contains(k, x)) break;
        best = k;
    }
    return best;
}

std::size_t DefiningSequence::total_cubes() const {
    std::size_t n = 0;
    for (const auto& [w, l] : loops) n += l->size();
    return n;
}

void DefiningSequence::finalize() {
    level_unions_.clear();
    corner_regions_.clear();
    for (int k = 0; k <= K; ++k) {
        std::vector<Int3> cells, corners;
        for (const auto& w : words_at(k)) {
            const CubicalLoop& l = loop_of(w);
            for (std::size_t p = 0; p < l.size(); ++p) cells.push_back(l.cell_at(p));
            for (auto cp : l.corner_positions()) corners.push_back(l.cell_at(cp));
        }
        level_unions_.push_back(std::make_shared<CubeCollection>(schedule.side(k), std::move(cells)));
        corner_regions_.push_back(
            std::make_shared<CubeCollection>(schedule.side(k), std::move(corners)));
    }
}

namespace {

WordEntry make_entry(const CubicalLoop& loop, const Int3& t1, const Int3& t2, long m_child,
                     bool clasped) {
    WordEntry e;
    e.loop = loop;
    e.inner = middle_third_ring(loop);
    auto sp = split_loop(e.inner, t1, t2);
    if (!ok(sp))
        throw std::logic_error("defining_sequence: split failed (" +
                               get_violation(sp).condition + ")");
    e.split = get_value(sp);
    if (clasped) {
        auto pair = clasped_children(e.split, m_child);
        e.plus = pair.plus;
        e.minus = pair.minus;
    } else {
        e.plus = parallel_child(e.split.plus, m_child);
        // the mirrored partner is filled in by the caller
    }
    return e;
}

Racetrack map_racetrack(InvolutionChoice c, const Racetrack& r) {
    Racetrack out;
    out.loop = map_loop(c, r.loop);
    out.mid_t1 = involution_cell(c, r.mid_t1);
    out.mid_t2 = involution_cell(c, r.mid_t2);
    out.axis_t1 = r.axis_t1;
    out.axis_t2 = r.axis_t2;
    return out;
}

CubicalArc map_arc(InvolutionChoice c, const CubicalArc& a) {
    std::vector<Int3> cells;
    for (std::size_t p = 0; p < a.size(); ++p) cells.push_back(involution_cell(c, a.cell_at(p)));
    auto v = CubicalArc::validate(CubeCollection(a.side(), std::move(cells)));
    if (!ok(v)) throw std::logic_error("map_arc: image fails validation");
    return get_value(v);
}

WordEntry map_entry(InvolutionChoice c, const WordEntry& e) {
    WordEntry out;
    out.loop = map_loop(c, e.loop);
    out.inner = map_loop(c, e.inner);
    // the letter flip swaps the two children together with their arcs
    out.split.plus = map_arc(c, e.split.minus);
    out.split.minus = map_arc(c, e.split.plus);
    out.split.t1 = involution_cell(c, e.split.t1);
    out.split.t2 = involution_cell(c, e.split.t2);
    out.plus = map_racetrack(c, e.minus);
    out.minus = map_racetrack(c, e.plus);
    return out;
}

} // namespace

DefiningSequence defining_sequence(InvolutionChoice choice, const Rational& p, int K,
                                   const BuildOptions& opt) {
    DefiningSequence seq;
    seq.choice = choice;
    seq.K = K;
    seq.options = opt;
    seq.schedule = make_schedule(p, opt.L2, std::max(K, 1), DivisorPolicy::ClaspCompatible, opt.r0);

    CubicalLoop root = root_loop(opt.r0);
    seq.loops["" ] = std::make_shared<const CubicalLoop>(root);
    std::size_t total = root.size();

    struct Pending {
        std::string word;
        Int3 t1, t2; // split terminals on the inner lattice
    };
    std::vector<Pending> frontier;
    if (K >= 1) {
        auto [t1, t2] = root_terminals(choice);
        frontier.push_back({"", t1, t2});
    }

    const bool mirror_tree = choice == InvolutionChoice::Rotate;
    for (int level = 0; level < K; ++level) {
        std::vector<Pending> next;
        long m_child = seq.schedule.divisor(level + 1) / 3;
        for (const auto& pen : frontier) {
            const CubicalLoop& loop = seq.loop_of(pen.word);
            bool clasped = !(mirror_tree && pen.word.empty());
            WordEntry e = make_entry(loop, pen.t1, pen.t2, m_child, clasped);
            if (!clasped) {
                // root of the rotation-equivariant tree: congruent children
                e.minus = map_racetrack(choice, e.plus);
                std::swap(e.minus.mid_t1, e.minus.mid_t2);
            }
            seq.entries[pen.word] = e;
            seq.loops[pen.word + "+"] = std::make_shared<const CubicalLoop>(e.plus.loop);
            seq.loops[pen.word + "-"] = std::make_shared<const CubicalLoop>(e.minus.loop);
            total += e.plus.loop.size() + e.minus.loop.size();
            if (static_cast<long>(total) > opt.cube_budget)
                throw std::runtime_error("defining_sequence: cube budget exceeded");
            if (level + 1 < K) {
                auto anchors = [](const Racetrack& r) {
                    return std::pair<Int3, Int3>{r.mid_t1 * 3 + Int3{1, 1, 1},
                                                 r.mid_t2 * 3 + Int3{1, 1, 1}};
                };
                auto [p1, p2] = anchors(e.plus);
                next.push_back({pen.word + "+", p1, p2});
                if (!(mirror_tree && flip_word(pen.word + "-") < pen.word + "-")) {
                    auto [q1, q2] = anchors(e.minus);
                    next.push_back({pen.word + "-", q1, q2});
                }
            }
            if (mirror_tree) {
                // mirror this entry onto the flipped word
                std::string fw = flip_word(pen.word);
                if (fw != pen.word) {
                    WordEntry me = map_entry(choice, e);
                    seq.entries[fw] = me;
                    seq.loops[fw + "+"] = std::make_shared<const CubicalLoop>(me.plus.loop);
                    seq.loops[fw + "-"] = std::make_shared<const CubicalLoop>(me.minus.loop);
                    total += me.plus.loop.size() + me.minus.loop.size();
                }
            }
        }
        // For the rotate tree only the '+' subtree is generated geometrically;
        // drop pendings that belong to the mirrored half.
        if (mirror_tree) {
            std::vector<Pending> kept;
            for (auto& pn : next)
                if (pn.word.empty() || pn.word[0] == '+') kept.push_back(pn);
            next = std::move(kept);
        }
        frontier = std::move(next);
    }
    seq.finalize();
    return seq;
}

namespace {

void add(std::vector<CheckItem>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

// Middle-third pair conditions with integer arithmetic (f = 3).
bool fast_pair_check(const CubicalLoop& outer, const CubicalLoop& inner, std::string& why) {
    const auto& oc = outer.collection();
    for (std::size_t i = 0; i < inner.size(); ++i) {
        Int3 q = inner.cell_at(i);
        Int3 pc = parent_cell(q, 3);
        if (!oc.contains_cell(pc)) { why = "inner cube outside the outer union"; return false; }
        // containment in a single parent cube is automatic on the 1/3 lattice
        if (touches_parent_boundary(q, 3, oc)) { why = "inner cube touches the outer boundary"; return false; }
    }
    // roles
    auto oroles = std::vector<CubeRole>(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) oroles[i] = classify(oc, i);
    std::map<std::size_t, int> corners_in;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        CubeRole ir = classify(inner.collection(), inner.order()[i]);
        auto oi = oc.index_of(parent_cell(inner.cell_at(i), 3));
        CubeRole orr = oroles[*oi];
        if (orr == CubeRole::I && ir != CubeRole::I) { why = "outer I-cube holds a non-I inner cube"; return false; }
        if (ir == CubeRole::Corner) corners_in[*oi]++;
    }
    for (std::size_t i = 0; i < outer.size(); ++i) {
        if (oroles[i] == CubeRole::Corner && corners_in[i] != 1) { why = "outer corner without exactly one inner corner"; return false; }
        if (oroles[i] != CubeRole::Corner && corners_in.count(i) && corners_in[i] > 0) { why = "inner corner in a non-corner outer cube"; return false; }
    }
    // shared symmetry planes at corners: the inner corner is the centered
    // subcube, so plane equality reduces to matching arm patterns
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (classify(inner.collection(), inner.order()[i]) != CubeRole::Corner) continue;
        Int3 q = inner.cell_at(i);
        Int3 pc = parent_cell(q, 3);
        if (!(q == pc * 3 + Int3{1, 1, 1})) { why = "inner corner not centered in its outer corner"; return false; }
        std::size_t n = inner.size();
        Int3 darm1 = inner.cell_at((i + 1) % n) - q;
        Int3 darm2 = inner.cell_at((i + n - 1) % n) - q;
        auto oi = oc.index_of(pc);
        std::size_t opos = 0;
        for (std::size_t ppos = 0; ppos < outer.size(); ++ppos)
            if (outer.order()[ppos] == *oi) opos = ppos;
        Int3 oarm1 = outer.cell_at((opos + 1) % outer.size()) - pc;
        Int3 oarm2 = outer.cell_at((opos + outer.size() - 1) % outer.size()) - pc;
        bool same = (darm1 == oarm1 && darm2 == oarm2) || (darm1 == oarm2 && darm2 == oarm1);
        if (!same) { why = "inner corner arms differ from the outer corner arms"; return false; }
    }
    // uniformity with equality: distance exactly one inner side
    std::int64_t d2 = min_dist2_to_parent_boundary(inner.collection().cells(), 3, oc);
    if (d2 != 1) { why = "inner ring distance to the boundary is not one inner side"; return false; }
    return true;
}

// Proper nesting of a racetrack in its arc, integer arithmetic (f = m).
bool fast_proper_nesting(const CubicalArc& arc, const CubicalLoop& child, long m,
                         std::string& why) {
    const auto& ac = arc.collection();
    std::map<std::size_t, int> corners_in;
    for (std::size_t i = 0; i < child.size(); ++i) {
        Int3 q = child.cell_at(i);
        Int3 pc = parent_cell(q, m);
        auto ai = ac.index_of(pc);
        if (!ai) { why = "child cube outside the arc"; return false; }
        if (touches_parent_boundary(q, m, ac)) { why = "child cube touches the arc boundary"; return false; }
        if (classify(child.collection(), child.order()[i]) == CubeRole::Corner) corners_in[*ai]++;
    }
    for (std::size_t i = 0; i < ac.size(); ++i) {
        CubeRole role = classify(ac, i);
        int c = corners_in.count(i) ? corners_in[i] : 0;
        if (role == CubeRole::I && c != 0) { why = "arc I-cube holds a child corner"; return false; }
        if (role == CubeRole::Terminal && c != 2) { why = "arc terminal without exactly two child corners"; return false; }
        if (role == CubeRole::Corner) {
            if (c != 2) { why = "arc corner without exactly two child corners"; return false; }
        }
    }
    // plane sharing at arc corners via the exact rational predicate (few cubes)
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (classify(ac, i) != CubeRole::Corner) continue;
        auto pa = symmetry_plane(ac, i);
        for (std::size_t j = 0; j < child.size(); ++j) {
            if (classify(child.collection(), child.order()[j]) != CubeRole::Corner) continue;
            if (!(parent_cell(child.cell_at(j), m) == ac.cells()[i])) continue;
            auto pj = symmetry_plane(child.collection(), child.order()[j]);
            // compare as point sets: same normal direction up to sign and same offset
            Vec3 na = pa.n, nj = pj.n;
            Rational oa = pa.off, oj = pj.off;
            bool eq = (na == nj && oa == oj) ||
                      (na == Vec3(-nj.x, -nj.y, -nj.z) && oa == -oj);
            if (!eq) { why = "child corner off the arc corner symmetry plane"; return false; }
        }
    }
    return true;
}

} // namespace

std::vector<CheckItem> validate_sequence(const DefiningSequence& seq) {
    std::vector<CheckItem> out;
    const int K = seq.K;

    // per-word structural checks
    bool loops_ok = true, pairs_ok = true, splits_ok = true, nesting_ok = true, sides_ok = true,
         descent_ok = true, rsym_ok = true, length_ok = true;
    std::string why;
    for (const auto& [w, lptr] : seq.loops) {
        auto v = CubicalLoop::validate(lptr->collection());
        if (!ok(v)) { loops_ok = false; why = w; }
        int k = static_cast<int>(w.size());
        if (Rational(static_cast<long>(lptr->size())) * seq.side(k) > Rational(2)) {
            length_ok = false;
        }
    }
    add(out, "loops-valid", loops_ok, why);
    add(out, "cubical-length-bound", length_ok, "#L_w * r_k <= 2");

    for (const auto& [w, e] : seq.entries) {
        std::string reason;
        if (!fast_pair_check(e.loop, e.inner, reason)) {
            pairs_ok = false;
            why = w + ": " + reason;
        }
        // split partition: arcs share exactly the two terminals and cover the ring
        std::size_t total = e.split.plus.size() + e.split.minus.size();
        if (total != e.inner.size() + 2) splits_ok = false;
        if (!e.split.plus.collection().contains_cell(e.split.t1) ||
            !e.split.minus.collection().contains_cell(e.split.t1) ||
            !e.split.plus.collection().contains_cell(e.split.t2) ||
            !e.split.minus.collection().contains_cell(e.split.t2))
            splits_ok = false;
        long m = seq.schedule.divisor(static_cast<int>(w.size()) + 1) / 3;
        if (!fast_proper_nesting(e.split.plus, e.plus.loop, m, reason)) {
            nesting_ok = false;
            why = w + "+: " + reason;
        }
        if (!fast_proper_nesting(e.split.minus, e.minus.loop, m, reason)) {
            nesting_ok = false;
            why = w + "-: " + reason;
        }
        // child side <= inner side / 5 and inner side = loop side / 3
        if (!(e.inner.side() * Rational(3) == e.loop.side())) sides_ok = false;
        if (!(e.plus.loop.side() * Rational(5) <= e.inner.side())) sides_ok = false;
    }
    add(out, "nested-pairs", pairs_ok, why);
    add(out, "splittings", splits_ok);
    add(out, "proper-nesting", nesting_ok, why);
    add(out, "side-ratios", sides_ok, "s(L') = s(L)/3, s(child) <= s(L')/5");

    // terminal descent: split terminals of w sit inside the parent terminals
    for (const auto& [w, e] : seq.entries) {
        if (w.empty()) continue;
        std::string parent = w.substr(0, w.size() - 1);
        const WordEntry& pe = seq.entries.at(parent);
        // terminals of w as boxes at side r_k/3; parent terminals at r_{k-1}/3
        auto inside = [&](const Int3& tc, const Rational& ts) {
            Cube tq(Vec3(ts * Rational(tc.x), ts * Rational(tc.y), ts * Rational(tc.z)), ts);
            for (const Int3& pc : {pe.split.t1, pe.split.t2}) {
                Rational ps = pe.inner.side();
                Cube pq(Vec3(ps * Rational(pc.x), ps * Rational(pc.y), ps * Rational(pc.z)), ps);
                bool in = true;
                for (int ax = 0; ax < 3; ++ax)
                    if (tq.origin[ax] < pq.origin[ax] ||
                        tq.origin[ax] + tq.side > pq.origin[ax] + pq.side)
                        in = false;
                if (in) return true;
            }
            return false;
        };
        if (!inside(e.split.t1, e.inner.side()) || !inside(e.split.t2, e.inner.side()))
            descent_ok = false;
    }
    add(out, "terminal-descent", descent_ok);

    // exact R-symmetry / equivariance
    for (const auto& [w, lptr] : seq.loops) {
        std::string target = seq.choice == InvolutionChoice::Reflect ? w : flip_word(w);
        const CubicalLoop& tl = seq.loop_of(target);
        if (tl.size() != lptr->size()) { rsym_ok = false; continue; }
        for (std::size_t p = 0; p < lptr->size(); ++p)
            if (!tl.collection().contains_cell(involution_cell(seq.choice, lptr->cell_at(p)))) {
                rsym_ok = false;
                break;
            }
    }
    add(out, seq.choice == InvolutionChoice::Reflect ? "R-symmetry (per loop)"
                                                     : "R-equivariance (letter flip)",
        rsym_ok);

    // levels: disjoint non-touching unions, strict containment, exact measures
    bool disjoint_ok = true, interior_ok = true, measures_ok = true, corner_ok = true,
         monotone_ok = true, count_ok = true;
    for (int k = 0; k <= K; ++k) {
        auto words = seq.words_at(k);
        if (words.size() != (std::size_t(1) << k)) count_ok = false;
        // ownership map for touching test
        std::vector<std::pair<Int3, int>> owned;
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            const CubicalLoop& l = seq.loop_of(words[wi]);
            for (std::size_t p = 0; p < l.size(); ++p)
                owned.push_back({l.cell_at(p), static_cast<int>(wi)});
        }
        auto less = [](const std::pair<Int3, int>& a, const std::pair<Int3, int>& b) {
            const Int3 &x = a.first, &y = b.first;
            if (x.x != y.x) return x.x < y.x;
            if (x.y != y.y) return x.y < y.y;
            return x.z < y.z;
        };
        std::sort(owned.begin(), owned.end(), less);
        auto owner_of = [&](const Int3& c) -> int {
            auto it = std::lower_bound(owned.begin(), owned.end(), std::make_pair(c, -1), less);
            if (it == owned.end() || !(it->first == c)) return -1;
            return it->second;
        };
        for (const auto& [c, o] : owned) {
            for (std::int64_t dx = -1; dx <= 1 && disjoint_ok; ++dx)
                for (std::int64_t dy = -1; dy <= 1 && disjoint_ok; ++dy)
                    for (std::int64_t dz = -1; dz <= 1; ++dz) {
                        int o2 = owner_of(c + Int3{dx, dy, dz});
                        if (o2 >= 0 && o2 != o) { disjoint_ok = false; break; }
                    }
            if (!disjoint_ok) break;
        }
        if (k > 0) {
            long n = seq.schedule.divisor(k);
            const CubeCollection& up = seq.level_union(k - 1);
            for (const auto& c : seq.level_union(k).cells()) {
                if (!up.contains_cell(parent_cell(c, n)) || touches_parent_boundary(c, n, up)) {
                    interior_ok = false;
                    break;
                }
            }
            if (!(seq.level_volume(k) < seq.level_volume(k - 1))) monotone_ok = false;
        }
        Rational rk = seq.side(k);
        if (!(seq.level_volume(k) <= Rational(2).pow_int(k + 1) * rk * rk)) measures_ok = false;
        if (!(seq.corner_volume(k) <= Rational(4).pow_int(k + 1) * rk * rk * rk)) corner_ok = false;
    }
    add(out, "level-loop-count", count_ok, "2^k loops at level k");
    add(out, "level-disjointness", disjoint_ok, "loops pairwise non-touching");
    add(out, "strict-containment", interior_ok, "X_{k+1} inside the open interior of X_k");
    add(out, "measure-bound", measures_ok, "|X_k| <= 2^{k+1} r_k^2");
    add(out, "corner-measure-bound", corner_ok, "corner region <= 4^{k+1} r_k^3");
    add(out, "monotone-measures", monotone_ok);
    return out;
}

bool all_pass(const std::vector<CheckItem>& items) {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

} // namespace bing
