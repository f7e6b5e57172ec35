#include "bing/twist.hpp"

#include <stdexcept>

namespace bing {

namespace {

class TwistPrimitive final : public PrimitiveMap {
public:
    TwistPrimitive(CubeCollection support, Tube tube, PrimitivePtr g, PrimitivePtr ginv,
                   Rational d_shift)
        : support_(std::move(support)), tube_(std::move(tube)), g_(std::move(g)),
          ginv_(std::move(ginv)), d_(std::move(d_shift)), shear_(tube_twist(tube_, d_)) {}

    Vec3 evaluate(const Vec3& x) const override {
        if (!support_.covers(x)) return x;
        return ginv_->evaluate(shear_->evaluate(g_->evaluate(x)));
    }

    Mat3 derivative(const Vec3& x) const override {
        if (!support_.covers(x)) return Mat3::identity();
        Vec3 t = g_->evaluate(x);
        Vec3 ts = shear_->evaluate(t);
        return ginv_->derivative(ts) * (shear_->derivative(t) * g_->derivative(x));
    }

    PrimitivePtr inverse() const override {
        return std::make_shared<TwistPrimitive>(support_, tube_, g_, ginv_, -d_);
    }

    std::string kind() const override { return "twist"; }

    const PrimitivePtr& shear() const { return shear_; }

private:
    CubeCollection support_;
    Tube tube_;
    PrimitivePtr g_, ginv_;
    Rational d_;
    PrimitivePtr shear_;
};

} // namespace

TwistParts twist_map_parts(const NestedPair& pair, const Rotation& rho, int depth) {
    if (!pair.uniform) throw std::invalid_argument("twist_map: pair must be uniform");
    std::int64_t n = static_cast<std::int64_t>(pair.inner.size());
    std::int64_t k = ((rho.shift % n) + n) % n;
    TwistParts parts;
    if (k == 0) {
        parts.whole = std::make_shared<IdentityPrimitive>();
        return parts;
    }
    parts.unrolled = tube_unroll(pair, depth);
    Rational d = Rational(static_cast<long>(k)) * pair.inner.side();
    auto tw = std::make_shared<TwistPrimitive>(pair.outer.collection(), parts.unrolled.tube,
                                               parts.unrolled.forward, parts.unrolled.backward, d);
    parts.shear = tw->shear();
    parts.whole = tw;
    return parts;
}

PrimitivePtr twist_map(const NestedPair& pair, const Rotation& rho, int depth) {
    return twist_map_parts(pair, rho, depth).whole;
}

} // namespace bing
