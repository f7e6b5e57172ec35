#include "bing/linking.hpp"
#include "bing/loop.hpp"

#include <stdexcept>

namespace bing {

namespace {

// Projection along w = (e1, e2, 1): (x,y,z) -> (x - e1 z, y - e2 z).
struct Proj {
    Rational e1, e2;
    std::array<Rational, 2> operator()(const Vec3& p) const {
        return {p.x - e1 * p.z, p.y - e2 * p.z};
    }
    // Height used for over/under comparison.
    Rational height(const Vec3& p) const { return p.z + e1 * p.x + e2 * p.y; }
};

Rational cross2(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v) {
    return u[0] * v[1] - u[1] * v[0];
}

struct CrossingSum {
    bool generic = true;
    long signed_sum = 0;
};

CrossingSum crossings(const std::vector<Vec3>& a, const std::vector<Vec3>& b, const Proj& pr) {
    CrossingSum out;
    auto seg = [&](const std::vector<Vec3>& c, std::size_t i) {
        return std::pair<Vec3, Vec3>{c[i], c[(i + 1) % c.size()]};
    };
    for (std::size_t i = 0; i < a.size() && out.generic; ++i) {
        auto [p1, p2] = seg(a, i);
        auto P1 = pr(p1), P2 = pr(p2);
        std::array<Rational, 2> da{P2[0] - P1[0], P2[1] - P1[1]};
        if (da[0].sign() == 0 && da[1].sign() == 0) { out.generic = false; break; }
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto [q1, q2] = seg(b, j);
            auto Q1 = pr(q1), Q2 = pr(q2);
            std::array<Rational, 2> db{Q2[0] - Q1[0], Q2[1] - Q1[1]};
            if (db[0].sign() == 0 && db[1].sign() == 0) { out.generic = false; break; }
            Rational den = cross2(da, db);
            std::array<Rational, 2> w{Q1[0] - P1[0], Q1[1] - P1[1]};
            if (den.sign() == 0) {
                // Parallel projected segments: fine unless collinear supports touch.
                if (cross2(da, w).sign() == 0) {
                    Rational a0 = da[0] * P1[0] + da[1] * P1[1];
                    Rational a1 = da[0] * P2[0] + da[1] * P2[1];
                    Rational b0 = da[0] * Q1[0] + da[1] * Q1[1];
                    Rational b1 = da[0] * Q2[0] + da[1] * Q2[1];
                    if (a0 > a1) std::swap(a0, a1);
                    if (b0 > b1) std::swap(b0, b1);
                    if (!(a1 < b0 || b1 < a0)) {
                        out.generic = false;
                        break;
                    }
                }
                continue;
            }
            Rational s = cross2(w, db) / den;
            Rational t = cross2(w, da) / den;
            if (s < Rational(0) || s > Rational(1) || t < Rational(0) || t > Rational(1)) continue;
            if (s == Rational(0) || s == Rational(1) || t == Rational(0) || t == Rational(1)) {
                out.generic = false; // crossing at an endpoint
                break;
            }
            Vec3 pa = p1 + (p2 - p1) * s;
            Vec3 pb = q1 + (q2 - q1) * t;
            Rational ha = pr.height(pa), hb = pr.height(pb);
            if (ha == hb) { out.generic = false; break; } // curves intersect
            if (ha > hb) out.signed_sum += den.sign();   // count a-over-b crossings
        }
    }
    return out;
}

} // namespace

long linking_number(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    if (a.size() < 3 || b.size() < 3)
        throw std::invalid_argument("linking_number: degenerate polyline");
    static const long cand[][4] = {{0, 1, 0, 1},   {1, 64, 1, 1024},  {3, 64, 5, 1024},
                                   {7, 128, 11, 2048}, {13, 256, 17, 4096}, {19, 512, 23, 8192}};
    for (const auto& c : cand) {
        Proj pr{rat(c[0], c[1]), rat(c[2], c[3])};
        auto r = crossings(a, b, pr);
        if (r.generic) return r.signed_sum;
    }
    throw std::runtime_error("linking_number: no generic projection direction found");
}

std::vector<Vec3> core_polyline(const CubicalLoop& l) {
    std::vector<Vec3> pts;
    pts.reserve(l.size());
    for (std::size_t p = 0; p < l.size(); ++p) pts.push_back(l.cube_at(p).center());
    return pts;
}

} // namespace bing
