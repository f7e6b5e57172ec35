#pragma once

#include "bing/rational.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

namespace bing {

// Integer lattice vector (cube origins in units of the collection side).
struct Int3 {
    std::int64_t x = 0, y = 0, z = 0;

    friend bool operator==(const Int3&, const Int3&) = default;
    Int3 operator+(const Int3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Int3 operator-(const Int3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Int3 operator*(std::int64_t k) const { return {x * k, y * k, z * k}; }
    std::int64_t operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    std::int64_t& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline std::int64_t linf(const Int3& a) {
    auto m = std::abs(a.x);
    if (std::abs(a.y) > m) m = std::abs(a.y);
    if (std::abs(a.z) > m) m = std::abs(a.z);
    return m;
}

struct Vec3 {
    Rational x, y, z;

    Vec3() = default;
    Vec3(Rational a, Rational b, Rational c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}
    static Vec3 of(long a, long b, long c) { return Vec3(Rational(a), Rational(b), Rational(c)); }

    friend bool operator==(const Vec3&, const Vec3&) = default;
    Vec3 operator+(const Vec3& o) const { return Vec3(x + o.x, y + o.y, z + o.z); }
    Vec3 operator-(const Vec3& o) const { return Vec3(x - o.x, y - o.y, z - o.z); }
    Vec3 operator*(const Rational& k) const { return Vec3(x * k, y * k, z * k); }
    const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return Vec3(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
}
inline Rational linf(const Vec3& a) {
    Rational m = a.x.abs();
    if (a.y.abs() > m) m = a.y.abs();
    if (a.z.abs() > m) m = a.z.abs();
    return m;
}
inline double norm2(const Vec3& a) {
    double dx = a.x.to_double(), dy = a.y.to_double(), dz = a.z.to_double();
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

struct Mat3 {
    // Row-major rational 3x3.
    std::array<Rational, 9> m;

    static Mat3 identity();
    static Mat3 zero();
    static Mat3 diag(Rational a, Rational b, Rational c);

    const Rational& at(int r, int c) const { return m[3 * r + c]; }
    Rational& at(int r, int c) { return m[3 * r + c]; }

    friend bool operator==(const Mat3&, const Mat3&) = default;
    Vec3 operator*(const Vec3& v) const;
    Mat3 operator*(const Mat3& o) const;
    Rational det() const;
    Mat3 inverse() const;      // throws if singular
    Mat3 transpose() const;
    Mat3 adjugate() const;     // det * inverse, valid for singular too
    double op_norm() const;    // spectral norm, double precision
};

// Affine map x -> A x + b.
struct Affine {
    Mat3 A;
    Vec3 b;

    static Affine identity() { return {Mat3::identity(), Vec3()}; }
    Vec3 operator()(const Vec3& x) const { return A * x + b; }
    Affine then(const Affine& g) const { return {g.A * A, g.A * b + g.b}; } // g after this
    Affine inverse() const;
};

// Closed convex cell given by half-spaces n.x <= c.
struct HalfSpace {
    Vec3 n;
    Rational c;
    bool contains(const Vec3& x) const { return dot(n, x) <= c; }
    bool on_boundary(const Vec3& x) const { return dot(n, x) == c; }
};

struct ConvexCell {
    std::vector<HalfSpace> hs;
    bool contains(const Vec3& x) const {
        for (const auto& h : hs)
            if (!h.contains(x)) return false;
        return true;
    }
    bool strictly_contains(const Vec3& x) const {
        for (const auto& h : hs)
            if (dot(h.n, x) >= h.c) return false;
        return true;
    }
    // Cell mapped through an affine bijection: {x : n.(f^-1 x) <= c}.
    ConvexCell image_under(const Affine& f) const;
};

} // namespace bing
