#pragma once

#include <string>

#include "triop/rational.hpp"

namespace triop {

// Session-wide square root parameter d of the coefficient field Q(sqrt(d)).
// Default 3; must be square-free and >= 2. Set once at startup (CLI reads
// TRIOP_D); values constructed under different d must not be mixed.
long sqrt_param();
void set_sqrt_param(long d);
bool is_square_free(long d);

// Element of Q(sqrt(d)): rat + irr*sqrt(d). Immutable value type.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : rat_(n) {}
    Scalar(Rational rat) : rat_(std::move(rat)) {}
    Scalar(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

    static Scalar sqrt_d() { return Scalar(Rational(0), Rational(1)); }

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }

    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
    bool is_rational() const { return irr_.is_zero(); }
    bool is_one() const { return irr_.is_zero() && rat_ == Rational(1); }

    Scalar operator-() const { return {-rat_, -irr_}; }
    Scalar operator+(const Scalar& o) const { return {rat_ + o.rat_, irr_ + o.irr_}; }
    Scalar operator-(const Scalar& o) const { return {rat_ - o.rat_, irr_ - o.irr_}; }
    Scalar operator*(const Scalar& o) const {
        Rational d(sqrt_param());
        return {rat_ * o.rat_ + d * irr_ * o.irr_, rat_ * o.irr_ + irr_ * o.rat_};
    }
    // Inverse via the conjugate: norm = rat^2 - d*irr^2, nonzero for nonzero
    // elements because d is not a perfect square.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { rat_ += o.rat_; irr_ += o.irr_; return *this; }
    Scalar& operator-=(const Scalar& o) { rat_ -= o.rat_; irr_ -= o.irr_; return *this; }

    bool operator==(const Scalar& o) const { return rat_ == o.rat_ && irr_ == o.irr_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        if (rat_ != o.rat_) return rat_ < o.rat_;
        return irr_ < o.irr_;
    }

    // Canonical text, re-parseable: "2", "-1/2", "s", "2*s", "1-2*s", ...
    std::string str() const;

private:
    Rational rat_;
    Rational irr_;
};

inline Scalar scalar_pow(Scalar base, long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar out(1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
}

}  // namespace triop
