#include "bing/plmap.hpp"

#include <cmath>

namespace bing {

Mat3 Mat3::identity() {
    Mat3 r = zero();
    r.at(0, 0) = r.at(1, 1) = r.at(2, 2) = Rational(1);
    return r;
}

Mat3 Mat3::zero() {
    Mat3 r;
    for (auto& e : r.m) e = Rational(0);
    return r;
}

Mat3 Mat3::diag(Rational a, Rational b, Rational c) {
    Mat3 r = zero();
    r.at(0, 0) = std::move(a);
    r.at(1, 1) = std::move(b);
    r.at(2, 2) = std::move(c);
    return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    return Vec3(at(0, 0) * v.x + at(0, 1) * v.y + at(0, 2) * v.z,
                at(1, 0) * v.x + at(1, 1) * v.y + at(1, 2) * v.z,
                at(2, 0) * v.x + at(2, 1) * v.y + at(2, 2) * v.z);
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r = zero();
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    return r;
}

Rational Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
}

Mat3 Mat3::adjugate() const {
    Mat3 r;
    auto c = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(j, i) = c(i, j);
    return r;
}

Mat3 Mat3::inverse() const {
    Rational d = det();
    if (d.sign() == 0) throw std::domain_error("Mat3::inverse: singular matrix");
    Mat3 adj = adjugate();
    for (auto& e : adj.m) e = e / d;
    return adj;
}

double Mat3::op_norm() const {
    // Largest singular value via Jacobi iteration on A^T A (double precision).
    double a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += at(k, i).to_double() * at(k, j).to_double();
            a[i][j] = s;
        }
    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off < 1e-300) break;
        for (int p = 0; p < 2; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < 3; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    double lmax = std::max(a[0][0], std::max(a[1][1], a[2][2]));
    return std::sqrt(std::max(lmax, 0.0));
}

Affine Affine::inverse() const {
    Mat3 ai = A.inverse();
    Vec3 bi = ai * b;
    return {ai, Vec3(-bi.x, -bi.y, -bi.z)};
}

ConvexCell ConvexCell::image_under(const Affine& f) const {
    Affine inv = f.inverse();
    ConvexCell out;
    out.hs.reserve(hs.size());
    for (const auto& h : hs) {
        // n.(A' y + b') <= c  <=>  (A'^T n).y <= c - n.b'
        Vec3 n2 = inv.A.transpose() * h.n;
        Rational c2 = h.c - dot(h.n, inv.b);
        out.hs.push_back({n2, c2});
    }
    return out;
}

const Piece* PiecewisePrimitive::locate(const Vec3& x) const {
    for (const auto& p : pieces_)
        if (p.cell.contains(x)) return &p;
    return nullptr;
}

Vec3 PiecewisePrimitive::evaluate(const Vec3& x) const {
    const Piece* p = locate(x);
    if (!p) {
        if (outside_ == Outside::Identity) return x;
        throw EvalError(label_ + ": point outside domain");
    }
    return p->map(x);
}

Mat3 PiecewisePrimitive::derivative(const Vec3& x) const {
    const Piece* p = locate(x);
    if (!p) {
        if (outside_ == Outside::Identity) return Mat3::identity();
        throw EvalError(label_ + ": point outside domain");
    }
    for (const auto& h : p->cell.hs)
        if (h.on_boundary(x)) throw SkeletonError(label_ + ": point on piece boundary");
    return p->map.A;
}

PrimitivePtr PiecewisePrimitive::inverse() const {
    std::vector<Piece> inv;
    inv.reserve(pieces_.size());
    for (const auto& p : pieces_)
        inv.push_back({p.cell.image_under(p.map), p.map.inverse()});
    return std::make_shared<PiecewisePrimitive>(std::move(inv), outside_, label_ + "^-1");
}

Vec3 PLMapChain::evaluate(const Vec3& x) const {
    Vec3 y = x;
    for (const auto& m : maps_) y = m->evaluate(y);
    return y;
}

Mat3 PLMapChain::derivative_at(const Vec3& x) const {
    Mat3 d = Mat3::identity();
    Vec3 y = x;
    for (const auto& m : maps_) {
        d = m->derivative(y) * d;
        y = m->evaluate(y);
    }
    return d;
}

PLMapChain PLMapChain::inverse() const {
    std::vector<PrimitivePtr> inv;
    inv.reserve(maps_.size());
    for (auto it = maps_.rbegin(); it != maps_.rend(); ++it) inv.push_back((*it)->inverse());
    return PLMapChain(std::move(inv));
}

PLMapChain PLMapChain::then(const PLMapChain& next) const {
    std::vector<PrimitivePtr> all = maps_;
    all.insert(all.end(), next.maps_.begin(), next.maps_.end());
    return PLMapChain(std::move(all));
}

PrimitivePtr tame_shear() {
    Mat3 up = Mat3::identity(), dn = Mat3::identity();
    up.at(0, 1) = Rational(1);
    dn.at(0, 1) = Rational(-1);
    ConvexCell upper{{HalfSpace{Vec3::of(0, -1, 0), Rational(0)}}}; // x2 >= 0
    ConvexCell lower{{HalfSpace{Vec3::of(0, 1, 0), Rational(0)}}};  // x2 <= 0
    std::vector<Piece> pieces{{upper, {up, Vec3()}}, {lower, {dn, Vec3()}}};
    return std::make_shared<PiecewisePrimitive>(std::move(pieces),
                                                PiecewisePrimitive::Outside::Domain, "tame-shear");
}

PLMapChain tame_example() {
    auto h = tame_shear();
    auto lambda = std::make_shared<AffinePrimitive>(Affine{reflect_matrix(), Vec3()});
    return PLMapChain({h->inverse(), lambda, h});
}

Mat3 reflect_matrix() { return Mat3::diag(Rational(-1), Rational(1), Rational(1)); }
Mat3 rotate_matrix() { return Mat3::diag(Rational(-1), Rational(-1), Rational(1)); }

} // namespace bing
