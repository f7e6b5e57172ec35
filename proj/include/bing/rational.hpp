#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <iosfwd>

namespace bing {

// Exact rational scalar. Always in lowest terms, denominator > 0.
// Equality is structural equality of the canonical form.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational from_string(const std::string& s);  // "n", "n/d"; throws on junk
    static Rational from_decimal(const std::string& s); // "1.5" -> 3/2

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    int sign() const { return sgn(q_); }

    // Largest integer <= value, as a Rational and as int64 (must fit).
    Rational floor() const;
    std::int64_t floor_int64() const;

    // value * 10^k rounded toward +inf, divided back; used for rational
    // over-approximations of measured constants.
    static Rational ceil_scaled(double x, int decimals);

    Rational pow_int(long e) const; // e may be negative, base nonzero then

    bool is_integer() const { return q_.get_den() == 1; }
    bool fits_int64() const;
    std::int64_t to_int64() const; // requires integer and in range

    double to_double() const { return q_.get_d(); }
    std::string str() const;      // canonical "num/den" (den always printed)

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n, d); }

} // namespace bing
