#include "bing/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace bing {

Mat3 involution_matrix(InvolutionChoice c) {
    return c == InvolutionChoice::Reflect ? reflect_matrix() : rotate_matrix();
}

Int3 involution_cell(InvolutionChoice c, const Int3& cell) {
    if (c == InvolutionChoice::Reflect) return {-cell.x - 1, cell.y, cell.z};
    return {-cell.x - 1, -cell.y - 1, cell.z};
}

const char* involution_name(InvolutionChoice c) {
    return c == InvolutionChoice::Reflect ? "reflect" : "rotate";
}

namespace {

long p_num(const Rational& p) {
    if (!p.raw().get_num().fits_slong_p() || !p.raw().get_den().fits_slong_p())
        throw std::invalid_argument("schedule: p has an oversized representation");
    return p.raw().get_num().get_si();
}
long p_den(const Rational& p) { return p.raw().get_den().get_si(); }

// r^(2b-a) * 3^(k b) <= 1 encodes r <= 3^(-k/(2-p)) for p = a/b.
bool under_pow3_cap(const Rational& r, int k, const Rational& p) {
    long a = p_num(p), b = p_den(p);
    long e = 2 * b - a; // > 0 since p < 2
    if (e <= 0) throw std::invalid_argument("schedule: p must satisfy p < 2");
    Rational lhs = r.pow_int(e) * Rational(3).pow_int(static_cast<long>(k) * b);
    return lhs <= Rational(1);
}

// r^b * 10^(k b) * L2^(k a) <= 1 encodes r <= (10 L2^p)^(-k).
bool under_constant_cap(const Rational& r, int k, const Rational& p, const Rational& L2) {
    long a = p_num(p), b = p_den(p);
    Rational lhs = r.pow_int(b) * Rational(10).pow_int(static_cast<long>(k) * b) *
                   L2.pow_int(static_cast<long>(k) * a);
    return lhs <= Rational(1);
}

} // namespace

bool side_under_caps(const Rational& r, int k, const Rational& p, const Rational& L2) {
    if (!(r <= Rational(15).pow_int(-k))) return false;
    if (!under_pow3_cap(r, k, p)) return false;
    return under_constant_cap(r, k, p, L2);
}

SideSchedule make_schedule(const Rational& p, const Rational& L2, int K, DivisorPolicy policy,
                           const Rational& r0) {
    if (p < Rational(1) || !(p < Rational(2)))
        throw std::invalid_argument("make_schedule: need 1 <= p < 2");
    if (L2 < Rational(1)) throw std::invalid_argument("make_schedule: need L2 >= 1");
    if (r0.sign() <= 0) throw std::invalid_argument("make_schedule: need r0 > 0");
    SideSchedule s;
    s.p = p;
    s.L2 = L2;
    s.sides.push_back(r0);
    const long lo = policy == DivisorPolicy::ClaspCompatible ? 21 : 15;
    const long step = policy == DivisorPolicy::ClaspCompatible ? 6 : 3;
    for (int k = 1; k <= K; ++k) {
        const Rational prev = s.sides.back();
        long n = lo;
        // Float head start; exact tests settle the final value.
        double cap = std::min({std::pow(3.0, -static_cast<double>(k) / (2.0 - p.to_double())),
                               std::pow(15.0, -k),
                               std::pow(10.0 * std::pow(L2.to_double(), p.to_double()), -k)});
        double want = prev.to_double() / cap;
        if (want > static_cast<double>(n)) {
            long guess = static_cast<long>(want * 0.9);
            guess -= (guess - lo) % step;
            if (guess > n) n = guess;
        }
        while (!side_under_caps(prev / Rational(n), k, p, L2)) {
            n += step;
            if (n > 100000000L) throw std::runtime_error("make_schedule: divisor explosion");
        }
        while (n - step >= lo && side_under_caps(prev / Rational(n - step), k, p, L2)) n -= step;
        s.divisors.push_back(n);
        s.sides.push_back(prev / Rational(n));
    }
    return s;
}

bool schedule_explodes(const SideSchedule& s, long threshold) {
    for (long n : s.divisors)
        if (n > threshold) return true;
    return false;
}

} // namespace bing
