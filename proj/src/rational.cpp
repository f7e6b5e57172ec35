#include "bing/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bing {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::from_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return from_string(s);
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head = head.substr(1);
    if (head.empty()) head = "0";
    for (char c : head + tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("Rational: bad decimal '" + s + "'");
    mpz_class num;
    if (num.set_str(head + tail, 10) != 0)
        throw std::invalid_argument("Rational: bad decimal '" + s + "'");
    mpz_class den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
}

Rational Rational::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(mpq_class(f));
}

std::int64_t Rational::floor_int64() const {
    Rational f = floor();
    return f.to_int64();
}

Rational Rational::ceil_scaled(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    double up = std::ceil(x * scale);
    if (!std::isfinite(up)) throw std::domain_error("ceil_scaled: non-finite input");
    mpz_class num(static_cast<long>(up));
    mpz_class den = 1;
    for (int i = 0; i < decimals; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    if (inv && q_ == 0) throw std::domain_error("pow_int: zero base, negative exponent");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
    mpq_class q = inv ? mpq_class(d, n) : mpq_class(n, d);
    q.canonicalize();
    return Rational(q);
}

bool Rational::fits_int64() const {
    if (!is_integer()) return false;
    return q_.get_num().fits_slong_p();
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("to_int64: not an integer");
    if (!q_.get_num().fits_slong_p()) throw std::overflow_error("to_int64: out of range");
    return q_.get_num().get_si();
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace bing
