#pragma once

#include "bing/cube.hpp"
#include "bing/geom.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bing {

struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& m) : std::runtime_error(m) {}
};

// Point lies on a piece boundary; derivatives are undefined there (a.e. callers resample).
struct SkeletonError : std::runtime_error {
    explicit SkeletonError(const std::string& m) : std::runtime_error(m) {}
};

class PrimitiveMap;
using PrimitivePtr = std::shared_ptr<const PrimitiveMap>;

class PrimitiveMap {
public:
    virtual ~PrimitiveMap() = default;
    virtual Vec3 evaluate(const Vec3& x) const = 0;
    virtual Mat3 derivative(const Vec3& x) const = 0; // throws SkeletonError / EvalError
    virtual PrimitivePtr inverse() const = 0;
    virtual std::string kind() const = 0;
};

class IdentityPrimitive final : public PrimitiveMap {
public:
    Vec3 evaluate(const Vec3& x) const override { return x; }
    Mat3 derivative(const Vec3&) const override { return Mat3::identity(); }
    PrimitivePtr inverse() const override { return std::make_shared<IdentityPrimitive>(); }
    std::string kind() const override { return "identity"; }
};

class AffinePrimitive final : public PrimitiveMap {
public:
    explicit AffinePrimitive(Affine f) : f_(std::move(f)) {}
    Vec3 evaluate(const Vec3& x) const override { return f_(x); }
    Mat3 derivative(const Vec3&) const override { return f_.A; }
    PrimitivePtr inverse() const override { return std::make_shared<AffinePrimitive>(f_.inverse()); }
    std::string kind() const override { return "affine"; }
    const Affine& map() const { return f_; }

private:
    Affine f_;
};

struct Piece {
    ConvexCell cell;
    Affine map;
};

// Finite list of affine pieces on closed convex cells. Outside the pieces the
// map either errors (Domain) or acts as the identity (Identity).
class PiecewisePrimitive final : public PrimitiveMap {
public:
    enum class Outside { Domain, Identity };

    PiecewisePrimitive(std::vector<Piece> pieces, Outside outside, std::string label)
        : pieces_(std::move(pieces)), outside_(outside), label_(std::move(label)) {}

    Vec3 evaluate(const Vec3& x) const override;
    Mat3 derivative(const Vec3& x) const override;
    PrimitivePtr inverse() const override;
    std::string kind() const override { return label_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

private:
    const Piece* locate(const Vec3& x) const;
    std::vector<Piece> pieces_;
    Outside outside_;
    std::string label_;
};

// Composition chain; maps apply left to right (maps[0] first).
class PLMapChain {
public:
    PLMapChain() = default;
    explicit PLMapChain(std::vector<PrimitivePtr> maps) : maps_(std::move(maps)) {}

    static PLMapChain single(PrimitivePtr p) { return PLMapChain({std::move(p)}); }

    const std::vector<PrimitivePtr>& maps() const { return maps_; }
    bool empty() const { return maps_.empty(); }
    void push_back(PrimitivePtr p) { maps_.push_back(std::move(p)); }

    Vec3 evaluate(const Vec3& x) const;
    Mat3 derivative_at(const Vec3& x) const; // product along the evaluation orbit
    PLMapChain inverse() const;              // reversed list of inverses
    PLMapChain then(const PLMapChain& next) const;

private:
    std::vector<PrimitivePtr> maps_;
};

// The non-smooth bilipschitz shear h: (x1, x2, x3) -> (x1 + |x2|, x2, x3).
PrimitivePtr tame_shear();
// The tame involution h o lambda o h^-1 with lambda = diag(-1, 1, 1).
PLMapChain tame_example();

// Linear involution choices.
Mat3 reflect_matrix(); // (x, y, z) -> (-x, y, z)
Mat3 rotate_matrix();  // (x, y, z) -> (-x, -y, z)

} // namespace bing
