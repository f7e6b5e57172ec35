#include "bing/round_model.hpp"
#include "bing/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace bing {

namespace {

double sym3_max_eig(double a[3][3]) {
    for (int sweep = 0; sweep < 48; ++sweep) {
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
    return std::max(a[0][0], std::max(a[1][1], a[2][2]));
}

R4 point_at(const RoundTorusModel& m, double x1, double x2, double theta) {
    return {x1, x2, m.ell * std::cos(theta), m.ell * std::sin(theta)};
}

R4 sample_point(const RoundTorusModel& m, SplitMix64& rng) {
    // radius via sqrt for area-uniformity in the disk
    double rad = m.R * std::sqrt(rng.unit_double());
    double phi = 2 * M_PI * rng.unit_double();
    double theta = 2 * M_PI * rng.unit_double();
    return point_at(m, rad * std::cos(phi), rad * std::sin(phi), theta);
}

double dist4(const R4& a, const R4& b) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace

double round_twist_angle(const RoundTorusModel& m, double radius) {
    if (!(m.r < m.R)) throw std::invalid_argument("round model: need r < R");
    if (radius <= m.r) return m.alpha;
    return m.alpha * (m.R - radius) / (m.R - m.r);
}

R4 round_twist_apply(const RoundTorusModel& m, const R4& p) {
    double rad = std::hypot(p[0], p[1]);
    double u = round_twist_angle(m, rad);
    double c = std::cos(u), s = std::sin(u);
    return {p[0], p[1], c * p[2] - s * p[3], s * p[2] + c * p[3]};
}

double round_twist_max_derivative(const RoundTorusModel& m, std::size_t samples,
                                  std::uint64_t seed, double step) {
    SplitMix64 rng(seed);
    double best = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        double rad = m.R * std::sqrt(rng.unit_double());
        double phi = 2 * M_PI * rng.unit_double();
        double theta = 2 * M_PI * rng.unit_double();
        double x1 = rad * std::cos(phi), x2 = rad * std::sin(phi);
        // central differences along the intrinsic frame (x1, x2, arc length)
        R4 cols[3];
        for (int d = 0; d < 3; ++d) {
            double h = step;
            R4 hi, lo;
            if (d == 0) {
                hi = round_twist_apply(m, point_at(m, x1 + h, x2, theta));
                lo = round_twist_apply(m, point_at(m, x1 - h, x2, theta));
            } else if (d == 1) {
                hi = round_twist_apply(m, point_at(m, x1, x2 + h, theta));
                lo = round_twist_apply(m, point_at(m, x1, x2 - h, theta));
            } else {
                hi = round_twist_apply(m, point_at(m, x1, x2, theta + h / m.ell));
                lo = round_twist_apply(m, point_at(m, x1, x2, theta - h / m.ell));
            }
            for (int k = 0; k < 4; ++k) cols[d][k] = (hi[k] - lo[k]) / (2 * h);
        }
        double g[3][3];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                double s = 0;
                for (int k = 0; k < 4; ++k) s += cols[a][k] * cols[b][k];
                g[a][b] = s;
            }
        best = std::max(best, std::sqrt(std::max(0.0, sym3_max_eig(g))));
    }
    return best;
}

double round_twist_bilipschitz(const RoundTorusModel& m, std::size_t pairs, std::uint64_t seed) {
    SplitMix64 rng(seed);
    double best = 1.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        R4 p = sample_point(m, rng), q = sample_point(m, rng);
        double d0 = dist4(p, q);
        if (d0 < 1e-9) continue;
        double d1 = dist4(round_twist_apply(m, p), round_twist_apply(m, q));
        if (d1 <= 0) continue;
        best = std::max(best, std::max(d1 / d0, d0 / d1));
    }
    return best;
}

} // namespace bing
