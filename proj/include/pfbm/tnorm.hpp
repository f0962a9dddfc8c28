#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "pfbm/errors.hpp"
#include "pfbm/extended_real.hpp"

namespace pfbm {

/// The six strict t-norm families. Every member is continuous and strictly
/// monotone, hence admits a continuous additive generator tau with
/// tau(1) = 0 and tau(0) = +inf, and T(x, y) = tau^{-1}(tau(x) + tau(y)).
enum class TNormFamily {
    Product,        ///< algebraic product, tau(x) = -log x
    SchweizerSklar, ///< gamma in (-inf, 0), tau(x) = x^gamma - 1
    Hamacher,       ///< gamma in (0, +inf), tau(x) = log(gamma/x + 1 - gamma)
    Frank,          ///< gamma in (0, 1) u (1, +inf), tau(x) = -log((gamma^x - 1)/(gamma - 1))
    Dombi,          ///< gamma in (0, +inf), tau(x) = ((1 - x)/x)^gamma
    AczelAlsina,    ///< gamma in (0, +inf), tau(x) = (-log x)^gamma
};

/// Canonical lowercase serialization of a family name.
inline std::string_view family_name(TNormFamily family) {
    switch (family) {
        case TNormFamily::Product: return "product";
        case TNormFamily::SchweizerSklar: return "schweizer-sklar";
        case TNormFamily::Hamacher: return "hamacher";
        case TNormFamily::Frank: return "frank";
        case TNormFamily::Dombi: return "dombi";
        case TNormFamily::AczelAlsina: return "aczel-alsina";
    }
    throw std::logic_error("family_name: unknown family");
}

inline TNormFamily parse_family(std::string_view name) {
    if (name == "product") return TNormFamily::Product;
    if (name == "schweizer-sklar") return TNormFamily::SchweizerSklar;
    if (name == "hamacher") return TNormFamily::Hamacher;
    if (name == "frank") return TNormFamily::Frank;
    if (name == "dombi") return TNormFamily::Dombi;
    if (name == "aczel-alsina") return TNormFamily::AczelAlsina;
    throw DomainError("unknown t-norm family \"" + std::string(name) +
                      "\" (expected one of: product, schweizer-sklar, hamacher, frank, "
                      "dombi, aczel-alsina)");
}

/// A validated (family, gamma) pair. Construction rejects parameters outside
/// the family's validity domain; Product ignores gamma entirely.
class TNormSpec {
public:
    TNormSpec(TNormFamily family, double gamma = 0.0) : family_(family), gamma_(gamma) {
        if (family == TNormFamily::Product) {
            gamma_ = 0.0;
            return;
        }
        if (!std::isfinite(gamma)) {
            throw OutOfDomainGamma(std::string(family_name(family)), gamma);
        }
        const bool ok = [&] {
            switch (family) {
                case TNormFamily::SchweizerSklar: return gamma < 0.0;
                case TNormFamily::Hamacher: return gamma > 0.0;
                case TNormFamily::Frank: return gamma > 0.0 && gamma != 1.0;
                case TNormFamily::Dombi: return gamma > 0.0;
                case TNormFamily::AczelAlsina: return gamma > 0.0;
                default: return false;
            }
        }();
        if (!ok) throw OutOfDomainGamma(std::string(family_name(family)), gamma);
    }

    static TNormSpec product() { return TNormSpec(TNormFamily::Product); }

    TNormFamily family() const { return family_; }
    double gamma() const { return gamma_; }
    std::string_view name() const { return family_name(family_); }

private:
    TNormFamily family_;
    double gamma_;
};

namespace detail {

/// log|expm1(t)| evaluated without overflow or cancellation.
/// For t > 0 this is log(e^t - 1); for t < 0 it is log(1 - e^t).
inline double log_abs_expm1(double t) {
    if (t > 33.0) return t + std::log1p(-std::exp(-t));
    if (t > 0.0) return std::log(std::expm1(t));
    if (t > -0.693) return std::log(-std::expm1(t));
    return std::log1p(-std::exp(t));
}

/// log(1 + e^t) without overflow.
inline double log1p_exp(double t) {
    if (t > 33.0) return t + std::log1p(std::exp(-t));
    if (t < -37.0) return std::exp(t);
    return std::log1p(std::exp(t));
}

/// -log(1 - e^{-y}) for y > 0, accurate at both ends.
inline double neg_log_one_minus_exp_neg(double y) {
    if (y > 0.693) return -std::log1p(-std::exp(-y));
    return -std::log(-std::expm1(-y));
}

inline void require_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

/// Generator evaluation given both coordinates of the argument: x and its
/// complement u = 1 - x, each supplied at full precision by the caller.
/// Values hugging either end of [0, 1] keep their relative accuracy because
/// the stable coordinate is used directly instead of being reconstructed by
/// subtraction. Families prone to overflow or cancellation (Frank at large
/// or small gamma, Schweizer-Sklar and Hamacher near x = 1) go through
/// log1p/expm1 forms.
inline ExtendedReal generator_at(const TNormSpec& spec, double x, double u) {
    // u outranks x at the upper end: x may round to 1 while u still carries
    // the true distance.
    if (u == 0.0) return ExtendedReal(0.0);
    if (x == 0.0) return ExtendedReal::infinity();
    const double g = spec.gamma();
    // log(x), taken through whichever coordinate carries the precision
    const auto log_x = [&] { return u <= 0.5 ? std::log1p(-u) : std::log(x); };
    switch (spec.family()) {
        case TNormFamily::Product:
            return ExtendedReal(-log_x());
        case TNormFamily::SchweizerSklar:
            // x^gamma - 1 with gamma < 0
            return ExtendedReal(std::expm1(g * log_x()));
        case TNormFamily::Hamacher:
            // log(gamma/x + 1 - gamma) = log1p(gamma (1 - x) / x)
            return ExtendedReal(std::log1p(g * u / x));
        case TNormFamily::Frank: {
            // -log((gamma^x - 1)/(gamma - 1)); the two branches trade the
            // cancellation ends: the direct form degrades as x -> 1, the
            // complement form as x -> 0.
            const double c = std::log(g);
            if (u < 0.5) {
                return ExtendedReal(
                    -std::log1p(std::expm1(-c * u) / (-std::expm1(-c))));
            }
            return ExtendedReal(detail::log_abs_expm1(c) - detail::log_abs_expm1(c * x));
        }
        case TNormFamily::Dombi:
            return ExtendedReal(std::pow(u / x, g));
        case TNormFamily::AczelAlsina:
            return ExtendedReal(std::pow(-log_x(), g));
    }
    throw std::logic_error("generator_at: unknown family");
}

}  // namespace detail

/// The additive generator tau of the t-norm: strictly decreasing on [0, 1]
/// with tau(1) = 0 and tau(0) = +inf. The endpoints are returned exactly.
inline ExtendedReal generator(const TNormSpec& spec, double x) {
    detail::require_unit_interval(x, "generator argument");
    return detail::generator_at(spec, x, 1.0 - x);
}

/// The inverse of the additive generator, mapping [0, +inf] back onto [0, 1].
/// Strict t-norms have bijective generators, so this is an exact inverse;
/// the result is clamped to [0, 1] against floating rounding, and the
/// endpoints tau^{-1}(0) = 1, tau^{-1}(+inf) = 0 are exact.
inline double generator_inv(const TNormSpec& spec, ExtendedReal y) {
    if (y.is_zero()) return 1.0;
    if (y.is_infinite()) return 0.0;
    const double v = y.value();
    const double g = spec.gamma();
    const double r = [&] {
        switch (spec.family()) {
            case TNormFamily::Product:
                return std::exp(-v);
            case TNormFamily::SchweizerSklar:
                return std::exp(std::log1p(v) / g);
            case TNormFamily::Hamacher:
                return g / (g + std::expm1(v));
            case TNormFamily::Frank: {
                // log_gamma(1 + (gamma - 1) e^{-y}); (gamma - 1) e^{-y} is
                // +-e^L with L = log|gamma - 1| - y, signed by gamma - 1.
                const double c = std::log(g);
                const double L = detail::log_abs_expm1(c) - v;
                if (g > 1.0) return detail::log1p_exp(L) / c;
                return std::log1p(-std::exp(L)) / c;
            }
            case TNormFamily::Dombi:
                return 1.0 / (1.0 + std::pow(v, 1.0 / g));
            case TNormFamily::AczelAlsina:
                return std::exp(-std::pow(v, 1.0 / g));
        }
        throw std::logic_error("generator_inv: unknown family");
    }();
    if (std::isnan(r)) throw std::logic_error("generator_inv: NaN result");
    return detail::clamp01(r);
}

/// zeta(x) = tau(1 - x), the additive generator of the dual t-conorm:
/// strictly increasing with zeta(0) = 0 and zeta(1) = +inf.
inline ExtendedReal cogenerator(const TNormSpec& spec, double x) {
    detail::require_unit_interval(x, "cogenerator argument");
    return detail::generator_at(spec, 1.0 - x, x);
}

/// zeta^{-1}(y) = 1 - tau^{-1}(y), evaluated directly per family so that tiny
/// results keep full relative precision instead of dissolving into the
/// subtraction from 1.
inline double cogenerator_inv(const TNormSpec& spec, ExtendedReal y) {
    if (y.is_zero()) return 0.0;
    if (y.is_infinite()) return 1.0;
    const double v = y.value();
    const double g = spec.gamma();
    const double r = [&] {
        switch (spec.family()) {
            case TNormFamily::Product:
                return -std::expm1(-v);
            case TNormFamily::SchweizerSklar:
                return -std::expm1(std::log1p(v) / g);
            case TNormFamily::Hamacher: {
                const double em = std::expm1(v);
                if (std::isinf(em)) return 1.0;
                return em / (g + em);
            }
            case TNormFamily::Frank: {
                // 1 - log_gamma(1 + (gamma - 1) e^{-y}); the log argument
                // rewrites as 1 + (1 - e^{-c}) expm1(-y), which log1p takes
                // without losing the tiny-result end.
                const double c = std::log(g);
                return -std::log1p(-std::expm1(-c) * std::expm1(-v)) / c;
            }
            case TNormFamily::Dombi: {
                const double t = std::pow(v, 1.0 / g);
                if (std::isinf(t)) return 1.0;
                return t / (1.0 + t);
            }
            case TNormFamily::AczelAlsina:
                return -std::expm1(-std::pow(v, 1.0 / g));
        }
        throw std::logic_error("cogenerator_inv: unknown family");
    }();
    if (std::isnan(r)) throw std::logic_error("cogenerator_inv: NaN result");
    return detail::clamp01(r);
}

/// The cross map zeta(tau^{-1}(y)), which also equals tau(zeta^{-1}(y)).
/// Jumping straight between the two generator scales avoids materializing
/// the intermediate [0, 1] value, whose distance to 0 or 1 can drop below
/// double resolution even though the composed result is well conditioned.
inline ExtendedReal cross_generator(const TNormSpec& spec, ExtendedReal y) {
    if (y.is_zero()) return ExtendedReal::infinity();
    if (y.is_infinite()) return ExtendedReal(0.0);
    const double v = y.value();
    const double g = spec.gamma();
    switch (spec.family()) {
        case TNormFamily::Product:
            // zeta(e^{-y}) = -log(1 - e^{-y})
            return ExtendedReal(detail::neg_log_one_minus_exp_neg(v));
        case TNormFamily::SchweizerSklar: {
            const double w = std::log1p(v) / g;  // log of tau^{-1}(y), <= 0
            const double log_u =
                w < -0.693 ? std::log1p(-std::exp(w)) : std::log(-std::expm1(w));
            return ExtendedReal(std::expm1(g * log_u));
        }
        case TNormFamily::Hamacher:
            // zeta(gamma / (gamma + expm1(y))) = log1p(gamma^2 / expm1(y))
            return ExtendedReal(std::log1p(g * g / std::expm1(v)));
        case TNormFamily::Frank: {
            const double c = std::log(g);
            return ExtendedReal(std::log1p(std::expm1(c) * std::exp(-v)) +
                                detail::neg_log_one_minus_exp_neg(v));
        }
        case TNormFamily::Dombi:
            // zeta(1 / (1 + y^{1/gamma})) = 1 / y
            return ExtendedReal(1.0 / v);
        case TNormFamily::AczelAlsina: {
            const double t = std::pow(v, 1.0 / g);
            return ExtendedReal(std::pow(detail::neg_log_one_minus_exp_neg(t), g));
        }
    }
    throw std::logic_error("cross_generator: unknown family");
}

/// T(x, y) = tau^{-1}(tau(x) + tau(y)).
inline double tnorm(const TNormSpec& spec, double x, double y) {
    detail::require_unit_interval(x, "tnorm argument");
    detail::require_unit_interval(y, "tnorm argument");
    return generator_inv(spec, generator(spec, x) + generator(spec, y));
}

/// S(x, y) = 1 - T(1 - x, 1 - y) = zeta^{-1}(zeta(x) + zeta(y)).
inline double tconorm(const TNormSpec& spec, double x, double y) {
    detail::require_unit_interval(x, "tconorm argument");
    detail::require_unit_interval(y, "tconorm argument");
    return cogenerator_inv(spec, cogenerator(spec, x) + cogenerator(spec, y));
}

/// n-ary extension of T; the empty product is the neutral element 1.
inline double tnorm_n(const TNormSpec& spec, std::span<const double> xs) {
    ExtendedReal sum;
    for (double x : xs) {
        detail::require_unit_interval(x, "tnorm_n argument");
        sum += generator(spec, x);
    }
    return generator_inv(spec, sum);
}

/// n-ary extension of S; the empty sum is the neutral element 0.
inline double tconorm_n(const TNormSpec& spec, std::span<const double> xs) {
    ExtendedReal sum;
    for (double x : xs) {
        detail::require_unit_interval(x, "tconorm_n argument");
        sum += cogenerator(spec, x);
    }
    return cogenerator_inv(spec, sum);
}

/// tau(x) - tau(x + h) for h >= 0, evaluated as a single stable expression
/// per family. Subtracting two generator values loses the increment once it
/// drops below the values' own ulp; these forms keep its full relative
/// precision. The caller supplies 1 - x alongside x for the families whose
/// formulas need the complement.
inline ExtendedReal generator_decrement(const TNormSpec& spec, double x, double one_minus_x,
                                        double h) {
    if (h <= 0.0) return ExtendedReal(0.0);
    if (x == 0.0) return ExtendedReal::infinity();  // tau(0) = inf, tau(h) finite
    const double g = spec.gamma();
    switch (spec.family()) {
        case TNormFamily::Product:
            return ExtendedReal(std::log1p(h / x));
        case TNormFamily::SchweizerSklar:
            // x^g - (x+h)^g = -x^g expm1(g log1p(h/x))
            return ExtendedReal(-std::exp(g * std::log(x)) *
                                std::expm1(g * std::log1p(h / x)));
        case TNormFamily::Hamacher:
            return ExtendedReal(std::log1p(g * h / (x * (g + (1.0 - g) * (x + h)))));
        case TNormFamily::Frank: {
            // e^{cx} expm1(ch) / expm1(cx) = -expm1(ch)/expm1(-cx), overflow-free
            const double c = std::log(g);
            return ExtendedReal(std::log1p(-std::expm1(c * h) / std::expm1(-c * x)));
        }
        case TNormFamily::Dombi: {
            const double a = std::pow(one_minus_x / x, g);
            const double shrink = std::min(h / ((x + h) * one_minus_x), 1.0);
            return ExtendedReal(-a * std::expm1(g * std::log1p(-shrink)));
        }
        case TNormFamily::AczelAlsina: {
            const double big = one_minus_x <= 0.5 ? -std::log1p(-one_minus_x) : -std::log(x);
            const double shrink = std::min(std::log1p(h / x) / big, 1.0);
            return ExtendedReal(-std::pow(big, g) * std::expm1(g * std::log1p(-shrink)));
        }
    }
    throw std::logic_error("generator_decrement: unknown family");
}

/// tau^{-1}(y) - tau^{-1}(y + d) for d >= 0, again as one stable expression.
inline double inverse_decrement(const TNormSpec& spec, ExtendedReal y, ExtendedReal d) {
    if (d.is_zero()) return 0.0;
    if (y.is_infinite()) return 0.0;
    if (d.is_infinite()) return generator_inv(spec, y);
    const double v = y.value();
    const double dd = d.value();
    const double g = spec.gamma();
    const double r = [&]() -> double {
        switch (spec.family()) {
            case TNormFamily::Product:
                return -std::exp(-v) * std::expm1(-dd);
            case TNormFamily::SchweizerSklar:
                return -std::exp(std::log1p(v) / g) *
                       std::expm1(std::log1p(dd / (1.0 + v)) / g);
            case TNormFamily::Hamacher: {
                if (v > 350.0) return -g * std::exp(-v) * std::expm1(-dd);
                const double e1 = std::expm1(v);
                const double e2 = std::expm1(v + dd);
                if (std::isinf(e2)) return g / (g + e1);
                return g * std::exp(v) * std::expm1(dd) / ((g + e1) * (g + e2));
            }
            case TNormFamily::Frank: {
                const double c = std::log(g);
                const double t1 = std::expm1(c) * std::exp(-v);
                const double t2 = t1 * std::exp(-dd);
                return std::log1p(-t1 * std::expm1(-dd) / (1.0 + t2)) / c;
            }
            case TNormFamily::Dombi: {
                if (v == 0.0) {
                    const double t = std::pow(dd, 1.0 / g);
                    return std::isinf(t) ? 1.0 : t / (1.0 + t);
                }
                const double t1 = std::pow(v, 1.0 / g);
                if (std::isinf(t1)) return 0.0;
                const double grow = std::expm1(std::log1p(dd / v) / g);
                const double t2 = t1 * (1.0 + grow);
                if (std::isinf(grow) || std::isinf(t2)) return 1.0 / (1.0 + t1);
                return t1 * grow / ((1.0 + t1) * (1.0 + t2));
            }
            case TNormFamily::AczelAlsina: {
                if (v == 0.0) return -std::expm1(-std::pow(dd, 1.0 / g));
                const double t1 = std::pow(v, 1.0 / g);
                const double dt = t1 * std::expm1(std::log1p(dd / v) / g);
                return -std::exp(-t1) * std::expm1(-dt);
            }
        }
        throw std::logic_error("inverse_decrement: unknown family");
    }();
    if (std::isnan(r)) throw std::logic_error("inverse_decrement: NaN result");
    return detail::clamp01(r);
}

/// Which of the two generators scaled application should go through.
enum class GeneratorKind { Generator, Cogenerator };

/// tau^{-1}(lambda tau(x)) or zeta^{-1}(lambda zeta(x)) for lambda > 0.
/// lambda = 1 is the identity up to one inversion round trip.
inline double scaled_generator_apply(const TNormSpec& spec, double lambda, double x,
                                     GeneratorKind kind) {
    if (!(lambda > 0.0)) {
        throw DomainError("scaling factor must be positive, got " + std::to_string(lambda));
    }
    detail::require_unit_interval(x, "scaled_generator_apply argument");
    if (kind == GeneratorKind::Generator) {
        return generator_inv(spec, lambda * generator(spec, x));
    }
    return cogenerator_inv(spec, lambda * cogenerator(spec, x));
}

}  // namespace pfbm
