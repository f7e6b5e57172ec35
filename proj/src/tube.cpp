#include "bing/tube.hpp"
#include "bing/straightener.hpp"

#include <memory>
#include <stdexcept>

namespace bing {

namespace {

Affine rigid_chart_for(const Cube& cube, const Int3& walk_dir, std::size_t slot) {
    // Signed permutation with walk_dir -> +t; the remaining world axes, in
    // index order, -> +u, +v.
    int d_axis = walk_dir.x != 0 ? 0 : (walk_dir.y != 0 ? 1 : 2);
    int sgn = walk_dir[d_axis] > 0 ? 1 : -1;
    Mat3 m = Mat3::zero();
    m.at(0, d_axis) = Rational(sgn);
    int row = 1;
    for (int ax = 0; ax < 3; ++ax) {
        if (ax == d_axis) continue;
        m.at(row++, ax) = Rational(1);
    }
    Vec3 lo = m * cube.origin, hi = m * (cube.origin + Vec3(cube.side, cube.side, cube.side));
    Vec3 corner;
    for (int ax = 0; ax < 3; ++ax) corner[ax] = lo[ax] < hi[ax] ? lo[ax] : hi[ax];
    Vec3 target(Rational(static_cast<long>(slot)) * cube.side, Rational(0), Rational(0));
    return {m, target - corner};
}

void assert_slot_image(const Affine& f, const Cube& c, std::size_t slot) {
    Vec3 lo = f(c.origin), hi = f(c.origin + Vec3(c.side, c.side, c.side));
    for (int ax = 0; ax < 3; ++ax)
        if (hi[ax] < lo[ax]) std::swap(lo[ax], hi[ax]);
    Rational s = c.side;
    Rational t0 = Rational(static_cast<long>(slot)) * s;
    if (!(lo == Vec3(t0, Rational(0), Rational(0)) && hi == Vec3(t0 + s, s, s)))
        throw std::logic_error("tube_unroll: chart does not land on its slot");
}

// World <-> tube chart pair. Plain cubes carry an orientation index and a
// slot; their affine is reconstructed on demand. Corner chunks carry explicit
// pieces in both directions. The tube side reduces t modulo the period.
class TubeChart final : public PrimitiveMap {
public:
    struct Chunk {
        std::vector<Piece> fwd;
        std::vector<Piece> bwd;
    };
    struct Data {
        std::shared_ptr<const CubicalLoop> loop;
        Rational period, side;
        std::vector<Mat3> orients;
        std::vector<std::int32_t> slot_of_cube;   // by collection index
        std::vector<std::int8_t> orient_of_cube;  // -1 for chunk cubes
        std::vector<std::int32_t> chunk_of_cube;  // -1 for plain cubes
        std::vector<std::int32_t> plain_cube_of_slot; // -1 when slot is chunk-covered
        std::vector<std::int32_t> chunk_of_slot;      // -1 when plain
        std::vector<Chunk> chunks;
    };

    TubeChart(std::shared_ptr<const Data> d, bool world_side)
        : d_(std::move(d)), world_side_(world_side) {}

    Vec3 evaluate(const Vec3& x) const override {
        return world_side_ ? eval_fwd(x).first : eval_bwd(x).first;
    }

    Mat3 derivative(const Vec3& x) const override {
        return world_side_ ? eval_fwd(x, true).second : eval_bwd(x, true).second;
    }

    PrimitivePtr inverse() const override {
        return std::make_shared<TubeChart>(d_, !world_side_);
    }

    std::string kind() const override { return world_side_ ? "tube-unroll" : "tube-reroll"; }

private:
    Affine plain_affine(std::size_t cube_idx) const {
        const auto& coll = d_->loop->collection();
        const Mat3& m = d_->orients[static_cast<std::size_t>(d_->orient_of_cube[cube_idx])];
        Cube c = coll.cube(cube_idx);
        Vec3 lo = m * c.origin, hi = m * (c.origin + Vec3(c.side, c.side, c.side));
        Vec3 corner;
        for (int ax = 0; ax < 3; ++ax) corner[ax] = lo[ax] < hi[ax] ? lo[ax] : hi[ax];
        Vec3 target(Rational(d_->slot_of_cube[cube_idx]) * d_->side, Rational(0), Rational(0));
        return {m, target - corner};
    }

    std::pair<Vec3, Mat3> eval_fwd(const Vec3& x, bool want_deriv = false) const {
        const auto& coll = d_->loop->collection();
        auto cell = coll.cell_of_point(x);
        if (!cell) throw EvalError("tube-unroll: point outside the loop");
        std::size_t ci = *coll.index_of(*cell);
        if (d_->chunk_of_cube[ci] < 0) {
            if (want_deriv) {
                Cube c = coll.cube(ci);
                for (int ax = 0; ax < 3; ++ax)
                    if (x[ax] == c.origin[ax] || x[ax] == c.origin[ax] + c.side)
                        throw SkeletonError("tube-unroll: point on a chart face");
            }
            Affine f = plain_affine(ci);
            return {f(x), f.A};
        }
        const auto& pieces = d_->chunks[static_cast<std::size_t>(d_->chunk_of_cube[ci])].fwd;
        for (const auto& p : pieces)
            if (p.cell.contains(x)) {
                if (want_deriv)
                    for (const auto& h : p.cell.hs)
                        if (h.on_boundary(x))
                            throw SkeletonError("tube-unroll: point on a piece boundary");
                return {p.map(x), p.map.A};
            }
        throw EvalError("tube-unroll: no piece contains the point");
    }

    std::pair<Vec3, Mat3> eval_bwd(const Vec3& x, bool want_deriv = false) const {
        Vec3 x2 = x;
        Rational q = (x.x / d_->period).floor();
        x2.x = x.x - q * d_->period;
        Rational slot_r = (x2.x / d_->side).floor();
        std::int64_t slot = slot_r.to_int64();
        std::int64_t n = static_cast<std::int64_t>(d_->plain_cube_of_slot.size());
        if (slot == n) slot = 0; // t exactly at the period boundary
        if (slot < 0 || slot >= n) throw EvalError("tube-reroll: t-slot out of range");
        auto try_slot = [&](std::int64_t s, const Vec3& pt) -> std::optional<std::pair<Vec3, Mat3>> {
            if (s < 0) s += n;
            if (s >= n) s -= n;
            if (d_->chunk_of_slot[static_cast<std::size_t>(s)] >= 0) {
                const auto& pieces =
                    d_->chunks[static_cast<std::size_t>(d_->chunk_of_slot[static_cast<std::size_t>(s)])].bwd;
                for (const auto& p : pieces)
                    if (p.cell.contains(pt)) {
                        if (want_deriv)
                            for (const auto& h : p.cell.hs)
                                if (h.on_boundary(pt))
                                    throw SkeletonError("tube-reroll: point on a piece boundary");
                        return std::pair<Vec3, Mat3>{p.map(pt), p.map.A};
                    }
                return std::nullopt;
            }
            std::int32_t ci = d_->plain_cube_of_slot[static_cast<std::size_t>(s)];
            Affine f = plain_affine(static_cast<std::size_t>(ci)).inverse();
            Vec3 img = f(pt);
            Cube c = d_->loop->collection().cube(static_cast<std::size_t>(ci));
            if (!c.contains(img)) return std::nullopt;
            if (want_deriv) {
                for (int ax = 0; ax < 3; ++ax)
                    if (img[ax] == c.origin[ax] || img[ax] == c.origin[ax] + c.side)
                        throw SkeletonError("tube-reroll: point on a chart face");
            }
            return std::pair<Vec3, Mat3>{img, f.A};
        };
        if (auto r = try_slot(slot, x2)) return *r;
        // closed cells: points on slot boundaries may belong to a neighbor
        if (auto r = try_slot(slot - 1, x2)) return *r;
        if (slot == 0) {
            Vec3 x3 = x2;
            x3.x += d_->period;
            if (auto r = try_slot(n - 1, x3)) return *r;
        }
        Vec3 x4 = x2;
        x4.x -= d_->period;
        if (auto r = try_slot(0, x4)) { return *r; }
        throw EvalError("tube-reroll: no piece contains the point");
    }

    std::shared_ptr<const Data> d_;
    bool world_side_;
};

} // namespace

Unrolled tube_unroll(const CubicalLoop& l, int depth) {
    if (depth < 1) throw std::invalid_argument("tube_unroll: depth must be >= 1");
    const std::size_t n = l.size();
    const Rational s = l.side();
    const Rational period = Rational(static_cast<long>(n)) * s;

    std::vector<char> is_corner(n, 0);
    for (std::size_t p = 0; p < n; ++p)
        if (l.role_at(p) == CubeRole::Corner) is_corner[p] = 1;
    std::size_t start = n;
    for (std::size_t p = 0; p < n; ++p)
        if (!is_corner[p] && !is_corner[(p + n - 1) % n]) { start = p; break; }
    if (start == n) throw std::logic_error("tube_unroll: no admissible start cube");

    auto pos_at = [&](std::size_t i) { return (start + i) % n; };
    auto cell_at = [&](std::size_t i) { return l.cell_at(pos_at(i)); };

    auto data = std::make_shared<TubeChart::Data>();
    data->loop = std::make_shared<const CubicalLoop>(l);
    data->period = period;
    data->side = s;
    data->slot_of_cube.assign(n, -1);
    data->orient_of_cube.assign(n, -1);
    data->chunk_of_cube.assign(n, -1);
    data->plain_cube_of_slot.assign(n, -1);
    data->chunk_of_slot.assign(n, -1);

    auto orient_index = [&](const Mat3& m) -> std::int8_t {
        for (std::size_t i = 0; i < data->orients.size(); ++i)
            if (data->orients[i] == m) return static_cast<std::int8_t>(i);
        data->orients.push_back(m);
        return static_cast<std::int8_t>(data->orients.size() - 1);
    };

    std::vector<std::size_t> slot_of_pos(n, 0);
    auto coll_index = [&](std::size_t pos) { return l.order()[pos]; };
    auto unit3d = straightener_pieces_3d(depth);
    const Affine exit_rot = straightener_exit_rotation();

    Affine T = rigid_chart_for(l.cube_at(pos_at(0)), cell_at(1) - cell_at(0), 0);
    const Affine T0 = T;

    std::size_t i = 0;
    while (i < n) {
        std::size_t pos = pos_at(i);
        if (is_corner[pos]) throw std::logic_error("tube_unroll: walk landed on a corner");
        bool chunk_ahead = is_corner[pos_at(i + 1)];
        if (!chunk_ahead) {
            assert_slot_image(T, l.cube_at(pos), i);
            std::size_t ci = coll_index(pos);
            data->slot_of_cube[ci] = static_cast<std::int32_t>(i);
            data->orient_of_cube[ci] = orient_index(T.A);
            data->plain_cube_of_slot[i] = static_cast<std::int32_t>(ci);
            slot_of_pos[pos] = i;
            ++i;
            continue;
        }
        if (i + 2 >= n) throw std::logic_error("tube_unroll: chunk wraps the seam");
        std::size_t cpos = pos_at(i + 1), npos = pos_at(i + 2);
        CornerFrame fr;
        fr.corner_origin = l.cube_at(cpos).origin;
        fr.side = s;
        fr.to_prev = l.cell_at(pos) - l.cell_at(cpos);
        fr.to_next = l.cell_at(npos) - l.cell_at(cpos);
        Affine F = fr.unit_from_world();
        Affine Fi = fr.world_from_unit();
        Affine R = Fi.then(T);
        assert_slot_image(T, l.cube_at(pos), i);

        TubeChart::Chunk chunk;
        for (const auto& up : unit3d) {
            Piece w;
            w.cell = up.cell.image_under(Fi);
            w.map = F.then(up.map).then(R);
            chunk.bwd.push_back({w.cell.image_under(w.map), w.map.inverse()});
            chunk.fwd.push_back(std::move(w));
        }
        std::int32_t chunk_id = static_cast<std::int32_t>(data->chunks.size());
        data->chunks.push_back(std::move(chunk));
        for (std::size_t k = 0; k < 3; ++k) {
            std::size_t ci = coll_index(pos_at(i + k));
            data->chunk_of_cube[ci] = chunk_id;
            data->slot_of_cube[ci] = static_cast<std::int32_t>(i + k);
            data->chunk_of_slot[i + k] = chunk_id;
            slot_of_pos[pos_at(i + k)] = i + k;
        }
        T = F.then(exit_rot).then(R);
        assert_slot_image(T, l.cube_at(npos), i + 2);
        i += 3;
    }

    Affine expected = T0;
    expected.b.x += period;
    if (!(T.A == expected.A && T.b == expected.b))
        throw std::logic_error("tube_unroll: transverse holonomy is nontrivial");

    Unrolled u;
    u.tube = Tube{period, s, s / Rational(3)};
    u.forward = std::make_shared<TubeChart>(data, true);
    u.backward = std::make_shared<TubeChart>(std::move(data), false);
    u.start_pos = start;
    u.slot_of_pos = std::move(slot_of_pos);
    return u;
}

Unrolled tube_unroll(const NestedPair& pair, int depth) {
    if (pair.inner.side() * Rational(3) != pair.outer.side())
        throw std::invalid_argument("tube_unroll: pair is not a middle-third pair");
    Unrolled u = tube_unroll(pair.outer, depth);
    const Rational s = pair.outer.side();
    Rational lo = s / Rational(3), hi = s * Rational(2) / Rational(3);
    // Inner cubes inside corner neighborhoods go through the straightener
    // pieces; those get all eight vertices checked. Rigid-chart cubes are
    // pinned by two antipodal vertices.
    std::vector<char> near_corner(pair.outer.size(), 0);
    const auto& oc = pair.outer.collection();
    for (std::size_t p = 0; p < pair.outer.size(); ++p)
        if (pair.outer.role_at(p) == CubeRole::Corner) {
            std::size_t n = pair.outer.size();
            near_corner[pair.outer.order()[p]] = 1;
            near_corner[pair.outer.order()[(p + 1) % n]] = 1;
            near_corner[pair.outer.order()[(p + n - 1) % n]] = 1;
        }
    for (std::size_t p = 0; p < pair.inner.size(); ++p) {
        Cube q = pair.inner.cube_at(p);
        Int3 host{(q.origin.x / s).floor_int64(), (q.origin.y / s).floor_int64(),
                  (q.origin.z / s).floor_int64()};
        auto oi = oc.index_of(host);
        bool full = !oi || near_corner[*oi];
        auto check = [&](const Vec3& v) {
            Vec3 img = u.forward->evaluate(v);
            for (int ax = 1; ax < 3; ++ax)
                if (img[ax] != lo && img[ax] != hi)
                    throw std::logic_error("tube_unroll: inner ring off the straight inner tube");
        };
        if (full) {
            for (const auto& v : q.vertices()) check(v);
        } else {
            check(q.origin);
            check(q.origin + Vec3(q.side, q.side, q.side));
        }
    }
    return u;
}

PrimitivePtr tube_twist(const Tube& tube, const Rational& d_shift) {
    const Rational &s = tube.sigma, &si = tube.sigma_inner;
    if (si.sign() <= 0 || !(si < s))
        throw std::invalid_argument("tube_twist: need 0 < inner < sigma");
    if (!((d_shift / si).is_integer()))
        throw std::invalid_argument("tube_twist: shift not a multiple of the inner side");
    Rational half = s / Rational(2);
    Rational band = (s - si) / Rational(2);
    Rational ilo = half - si / Rational(2), ihi = half + si / Rational(2);

    std::vector<Piece> pieces;
    {
        Piece p;
        p.cell.hs = {{Vec3::of(0, -1, 0), -ilo},
                     {Vec3::of(0, 1, 0), ihi},
                     {Vec3::of(0, 0, -1), -ilo},
                     {Vec3::of(0, 0, 1), ihi}};
        p.map = Affine::identity();
        p.map.b.x = d_shift;
        pieces.push_back(std::move(p));
    }
    struct Ramp { int axis; int dir; };
    for (const Ramp r : {Ramp{1, +1}, Ramp{1, -1}, Ramp{2, +1}, Ramp{2, -1}}) {
        int other = r.axis == 1 ? 2 : 1;
        Piece p;
        Vec3 n1;
        n1[other] = Rational(1);
        n1[r.axis] = Rational(-r.dir);
        p.cell.hs.push_back({n1, half - Rational(r.dir) * half});
        Vec3 n1b;
        n1b[other] = Rational(-1);
        n1b[r.axis] = Rational(-r.dir);
        p.cell.hs.push_back({n1b, -half - Rational(r.dir) * half});
        Vec3 n3;
        n3[r.axis] = Rational(-r.dir);
        p.cell.hs.push_back({n3, -Rational(r.dir) * half - si / Rational(2)});
        Vec3 n4;
        n4[r.axis] = Rational(r.dir);
        p.cell.hs.push_back({n4, half + Rational(r.dir) * half});
        p.map = Affine::identity();
        p.map.A.at(0, r.axis) = -Rational(r.dir) * d_shift / band;
        p.map.b.x = d_shift * (half + Rational(r.dir) * half) / band;
        pieces.push_back(std::move(p));
    }
    return std::make_shared<PiecewisePrimitive>(std::move(pieces),
                                                PiecewisePrimitive::Outside::Domain, "tube-twist");
}

} // namespace bing
