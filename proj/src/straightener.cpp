#include "bing/straightener.hpp"

#include <stdexcept>

namespace bing {

namespace {

using P2 = std::array<Rational, 2>;

P2 pt(long xn, long xd, long yn, long yd) { return {rat(xn, xd), rat(yn, yd)}; }
P2 pt(long x, long y) { return {rat(x), rat(y)}; }

// Affine 2D map from three point correspondences; must preserve orientation.
Piece2 triangle_piece(std::array<P2, 3> src, std::array<P2, 3> dst) {
    {
        Rational d = (src[1][0] - src[0][0]) * (src[2][1] - src[0][1]) -
                     (src[1][1] - src[0][1]) * (src[2][0] - src[0][0]);
        if (d.sign() == 0) throw std::logic_error("triangle_piece: degenerate source");
        if (d.sign() < 0) {
            std::swap(src[1], src[2]);
            std::swap(dst[1], dst[2]);
        }
    }
    Rational ux = src[1][0] - src[0][0], uy = src[1][1] - src[0][1];
    Rational vx = src[2][0] - src[0][0], vy = src[2][1] - src[0][1];
    Rational det = ux * vy - uy * vx;
    Rational px = dst[1][0] - dst[0][0], py = dst[1][1] - dst[0][1];
    Rational qx = dst[2][0] - dst[0][0], qy = dst[2][1] - dst[0][1];
    // A * [u v] = [p q]  =>  A = [p q] * [u v]^-1
    Rational ia = vy / det, ib = -vx / det, ic = -uy / det, id = ux / det;
    Piece2 g;
    g.A = {px * ia + qx * ic, px * ib + qx * id, py * ia + qy * ic, py * ib + qy * id};
    g.b = {dst[0][0] - (g.A[0] * src[0][0] + g.A[1] * src[0][1]),
           dst[0][1] - (g.A[2] * src[0][0] + g.A[3] * src[0][1])};
    if ((g.A[0] * g.A[3] - g.A[1] * g.A[2]).sign() <= 0)
        throw std::logic_error("triangle_piece: orientation-reversing correspondence");
    for (int e = 0; e < 3; ++e) {
        const P2& u = src[e];
        const P2& v = src[(e + 1) % 3];
        Rational dx = v[0] - u[0], dy = v[1] - u[1];
        // left of the edge: dy*x - dx*y <= dy*ux - dx*uy
        g.hp.push_back({dy, -dx, dy * u[0] - dx * u[1]});
    }
    return g;
}

Piece2 rect_piece(const P2& lo, const P2& hi, std::array<Rational, 4> A, std::array<Rational, 2> b) {
    Piece2 g;
    g.A = std::move(A);
    g.b = std::move(b);
    g.hp.push_back({rat(-1), rat(0), -lo[0]});
    g.hp.push_back({rat(1), rat(0), hi[0]});
    g.hp.push_back({rat(0), rat(-1), -lo[1]});
    g.hp.push_back({rat(0), rat(1), hi[1]});
    return g;
}

const std::array<Rational, 4> kId2{rat(1), rat(0), rat(0), rat(1)};
// (x,y) -> (1-y, x)
const std::array<Rational, 4> kRot2{rat(0), rat(-1), rat(1), rat(0)};
const std::array<Rational, 2> kRotB{rat(1), rat(0)};

std::vector<Piece2> prototype() {
    std::vector<Piece2> p;
    p.push_back(triangle_piece({pt(0, 0), pt(1, 0), pt(1, 1)},
                               {pt(1, 2, 0, 1), pt(1, 0), pt(1, 2, 1, 1)}));
    p.push_back(triangle_piece({pt(0, 0), pt(1, 1), pt(0, 1)},
                               {pt(1, 2, 0, 1), pt(1, 2, 1, 1), pt(0, 0)}));
    p.push_back(triangle_piece({pt(0, 1), pt(1, 1), pt(1, 2)},
                               {pt(0, 0), pt(1, 2, 1, 1), pt(-1, 1)}));
    p.push_back(triangle_piece({pt(0, 1), pt(1, 2), pt(0, 2)},
                               {pt(0, 0), pt(-1, 1), pt(-1, 0)}));
    p.push_back(triangle_piece({pt(1, 0), pt(2, 0), pt(2, 1)},
                               {pt(1, 0), pt(2, 0), pt(2, 1)}));
    p.push_back(triangle_piece({pt(1, 0), pt(2, 1), pt(1, 1)},
                               {pt(1, 0), pt(2, 1), pt(1, 2, 1, 1)}));
    return p;
}

std::vector<Piece2> collars() {
    std::vector<Piece2> p;
    // V outer band and strip: whole [0,2/3]x[1,2] is the rigid rotation.
    p.push_back(rect_piece(pt(0, 1), pt(2, 3, 2, 1), kRot2, kRotB));
    // V inner collar.
    p.push_back(triangle_piece({pt(2, 3, 2, 1), pt(1, 1), pt(1, 2)},
                               {pt(-1, 1, 2, 3), pt(1, 2, 1, 1), pt(-1, 1)}));
    p.push_back(triangle_piece({pt(2, 3, 2, 1), pt(2, 3, 1, 1), pt(1, 1)},
                               {pt(-1, 1, 2, 3), pt(0, 1, 2, 3), pt(1, 2, 1, 1)}));
    // H band and strip: identity on [1,2]x[0,2/3].
    p.push_back(rect_piece(pt(1, 0), pt(2, 1, 2, 3), kId2, {rat(0), rat(0)}));
    // H inner collar.
    p.push_back(triangle_piece({pt(1, 1, 2, 3), pt(2, 1, 2, 3), pt(2, 1)},
                               {pt(1, 1, 2, 3), pt(2, 1, 2, 3), pt(2, 1)}));
    p.push_back(triangle_piece({pt(1, 1, 2, 3), pt(2, 1), pt(1, 1)},
                               {pt(1, 1, 2, 3), pt(2, 1), pt(1, 2, 1, 1)}));
    // Corner square, outer collar (6 triangles).
    p.push_back(triangle_piece({pt(0, 1), pt(1, 3, 1, 1), pt(1, 3, 2, 3)},
                               {pt(0, 0), pt(0, 1, 1, 3), pt(1, 3, 1, 3)}));
    p.push_back(triangle_piece({pt(0, 1), pt(1, 3, 2, 3), pt(0, 0)},
                               {pt(0, 0), pt(1, 3, 1, 3), pt(1, 2, 0, 1)}));
    p.push_back(triangle_piece({pt(0, 0), pt(1, 3, 2, 3), pt(1, 3, 1, 3)},
                               {pt(1, 2, 0, 1), pt(1, 3, 1, 3), pt(1, 2, 1, 3)}));
    p.push_back(triangle_piece({pt(0, 0), pt(2, 3, 1, 3), pt(1, 3, 1, 3)},
                               {pt(1, 2, 0, 1), pt(2, 3, 1, 3), pt(1, 2, 1, 3)}));
    p.push_back(triangle_piece({pt(0, 0), pt(1, 0), pt(2, 3, 1, 3)},
                               {pt(1, 2, 0, 1), pt(1, 0), pt(2, 3, 1, 3)}));
    p.push_back(triangle_piece({pt(1, 0), pt(1, 1, 1, 3), pt(2, 3, 1, 3)},
                               {pt(1, 0), pt(1, 1, 1, 3), pt(2, 3, 1, 3)}));
    // Corner square, inner collar (2 triangles).
    p.push_back(triangle_piece({pt(2, 3, 2, 3), pt(1, 1, 2, 3), pt(1, 1)},
                               {pt(1, 2, 2, 3), pt(1, 1, 2, 3), pt(1, 2, 1, 1)}));
    p.push_back(triangle_piece({pt(2, 3, 2, 3), pt(1, 1), pt(2, 3, 1, 1)},
                               {pt(1, 2, 2, 3), pt(1, 2, 1, 1), pt(0, 1, 2, 3)}));
    return p;
}

Piece2 shrink_into_elbow(const Piece2& q) {
    // Conjugate by s(p) = p/3 + (1/3, 1/3) on both sides.
    Piece2 r;
    r.A = q.A;
    Rational t = rat(1, 3);
    // b' = t - A t + b/3 componentwise with t = (1/3, 1/3)
    r.b = {t - (q.A[0] + q.A[1]) * t + q.b[0] / rat(3),
           t - (q.A[2] + q.A[3]) * t + q.b[1] / rat(3)};
    for (const auto& h : q.hp)
        r.hp.push_back({h[0], h[1], h[2] / rat(3) + (h[0] + h[1]) * t});
    return r;
}

} // namespace

std::vector<Piece2> straightener_pieces_2d(int depth) {
    if (depth < 0) throw std::invalid_argument("straightener: negative depth");
    if (depth == 0) return prototype();
    std::vector<Piece2> p = collars();
    for (const auto& q : straightener_pieces_2d(depth - 1)) p.push_back(shrink_into_elbow(q));
    return p;
}

std::vector<Piece> straightener_pieces_3d(int depth) {
    std::vector<Piece> out;
    for (const auto& q : straightener_pieces_2d(depth)) {
        Piece p;
        for (const auto& h : q.hp)
            p.cell.hs.push_back({Vec3(h[0], h[1], Rational(0)), h[2]});
        p.cell.hs.push_back({Vec3::of(0, 0, -1), Rational(0)});
        p.cell.hs.push_back({Vec3::of(0, 0, 1), Rational(1)});
        p.map.A = Mat3::identity();
        p.map.A.at(0, 0) = q.A[0];
        p.map.A.at(0, 1) = q.A[1];
        p.map.A.at(1, 0) = q.A[2];
        p.map.A.at(1, 1) = q.A[3];
        p.map.b = Vec3(q.b[0], q.b[1], Rational(0));
        out.push_back(std::move(p));
    }
    return out;
}

Affine straightener_exit_rotation() {
    Mat3 a = Mat3::zero();
    a.at(0, 1) = Rational(-1);
    a.at(1, 0) = Rational(1);
    a.at(2, 2) = Rational(1);
    return {a, Vec3::of(1, 0, 0)};
}

double straightener_bilipschitz(int depth) {
    double best = 1.0;
    for (const auto& p : straightener_pieces_3d(depth)) {
        double f = p.map.A.op_norm();
        double g = p.map.A.inverse().op_norm();
        best = std::max(best, std::max(f, g));
    }
    return best;
}

Affine CornerFrame::world_from_unit() const {
    // Unit axes: e_x -> to_prev, e_y -> to_next, e_z -> w with det +1.
    Vec3 uh(Rational(to_prev.x), Rational(to_prev.y), Rational(to_prev.z));
    Vec3 uv(Rational(to_next.x), Rational(to_next.y), Rational(to_next.z));
    Vec3 w = cross(uh, uv);
    Mat3 m = Mat3::zero();
    for (int r = 0; r < 3; ++r) {
        m.at(r, 0) = uh[r] * side;
        m.at(r, 1) = uv[r] * side;
        m.at(r, 2) = w[r] * side;
    }
    // Base vertex of the corner cube mapping to the unit origin.
    Vec3 c0 = corner_origin;
    for (int r = 0; r < 3; ++r) {
        if (uh[r].sign() < 0 || uv[r].sign() < 0 || w[r].sign() < 0) c0[r] += side;
    }
    return {m, c0};
}

Affine CornerFrame::unit_from_world() const { return world_from_unit().inverse(); }

PrimitivePtr corner_straightener(const CornerFrame& f, int depth) {
    if (linf(f.to_prev) != 1 || linf(f.to_next) != 1 ||
        std::abs(f.to_prev.x * f.to_next.x + f.to_prev.y * f.to_next.y +
                 f.to_prev.z * f.to_next.z) != 0)
        throw std::invalid_argument("corner_straightener: malformed L-shape");
    Affine F = f.unit_from_world();
    Affine Fi = f.world_from_unit();
    std::vector<Piece> pieces;
    for (const auto& p : straightener_pieces_3d(depth)) {
        Piece w;
        w.cell = p.cell.image_under(Fi); // unit cell -> world cell
        w.map = F.then(p.map).then(Fi);
        pieces.push_back(std::move(w));
    }
    return std::make_shared<PiecewisePrimitive>(std::move(pieces),
                                                PiecewisePrimitive::Outside::Domain,
                                                "corner-straightener");
}

} // namespace bing
