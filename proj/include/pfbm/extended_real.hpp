#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pfbm {

/// A nonnegative extended real in [0, +inf], the value space of additive
/// generators. +inf is a first-class value: every strict t-norm has
/// tau(0) = +inf, and boundary memberships (mu = 0, nu = 1) hit it routinely.
///
/// Arithmetic rules: sums saturate at +inf; scaling by a positive factor
/// keeps +inf. Values at or above the saturation threshold (1e300) collapse
/// to +inf so that downstream sums cannot overflow into garbage. Negative
/// inputs within rounding slack clamp to zero; anything more negative, or
/// NaN, is an internal error.
class ExtendedReal {
public:
    ExtendedReal() = default;

    explicit ExtendedReal(double v) : v_(sanitize(v)) {}

    static ExtendedReal infinity() {
        return ExtendedReal(std::numeric_limits<double>::infinity());
    }

    double value() const { return v_; }
    bool is_infinite() const { return std::isinf(v_); }
    bool is_zero() const { return v_ == 0.0; }

    ExtendedReal& operator+=(ExtendedReal other) {
        v_ = sanitize(v_ + other.v_);
        return *this;
    }

    friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) { return a += b; }

    /// Scale by a strictly positive factor; lambda * inf stays inf.
    friend ExtendedReal operator*(double lambda, ExtendedReal x) {
        if (!(lambda > 0.0)) {
            throw std::logic_error("ExtendedReal: scaling factor must be positive");
        }
        if (x.is_infinite()) return infinity();
        return ExtendedReal(lambda * x.v_);
    }

    friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
    friend bool operator<(ExtendedReal a, ExtendedReal b) { return a.v_ < b.v_; }

private:
    static constexpr double kSaturation = 1e300;
    static constexpr double kNegativeSlack = 1e-12;

    static double sanitize(double v) {
        if (std::isnan(v)) {
            throw std::logic_error("ExtendedReal: NaN in generator arithmetic");
        }
        if (v >= kSaturation) return std::numeric_limits<double>::infinity();
        if (v < 0.0) {
            if (v > -kNegativeSlack) return 0.0;
            throw std::logic_error("ExtendedReal: negative generator value");
        }
        return v;
    }

    double v_ = 0.0;
};

}  // namespace pfbm
