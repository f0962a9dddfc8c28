#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>

#include "pfbm/errors.hpp"

namespace pfbm {

/// Absolute slack allowed on the membership-sum invariant; sums in
/// (1, 1 + kSumSlack] are renormalized, larger ones rejected.
inline constexpr double kSumSlack = 1e-9;

/// A picture fuzzy number: degrees of positive (mu), neutral (eta) and
/// negative (nu) membership, each in [0, 1] with mu + eta + nu <= 1.
/// The remaining mass pi = 1 - (mu + eta + nu) is the refusal degree.
///
/// Construction validates. Components that stray outside [0, 1] by at most
/// kSumSlack (the inevitable residue of generator round trips) are clamped;
/// a sum in (1, 1 + kSumSlack] is scaled back onto the simplex. Violations
/// beyond that slack raise InvalidPfn.
class Pfn {
public:
    Pfn(double mu, double eta, double nu)
        : mu_(check_component(mu, "mu")),
          eta_(check_component(eta, "eta")),
          nu_(check_component(nu, "nu")) {
        const double sum = mu_ + eta_ + nu_;
        if (sum > 1.0 + kSumSlack) {
            throw InvalidPfn("membership sum " + std::to_string(sum) + " exceeds 1");
        }
        if (sum > 1.0) {
            mu_ /= sum;
            eta_ /= sum;
            nu_ /= sum;
        }
    }

    double mu() const { return mu_; }
    double eta() const { return eta_; }
    double nu() const { return nu_; }

    /// pi = 1 - (mu + eta + nu).
    double refusal() const { return 1.0 - (mu_ + eta_ + nu_); }

    /// The complement swaps positive and negative membership; involutive.
    Pfn complement() const { return Pfn(nu_, eta_, mu_); }

private:
    static double check_component(double v, const char* name) {
        if (!std::isfinite(v)) {
            throw InvalidPfn(std::string(name) + " is not finite");
        }
        if (v < 0.0) {
            if (v < -kSumSlack) {
                throw InvalidPfn(std::string(name) + " = " + std::to_string(v) +
                                 " is negative");
            }
            return 0.0;
        }
        if (v > 1.0) {
            if (v > 1.0 + kSumSlack) {
                throw InvalidPfn(std::string(name) + " = " + std::to_string(v) +
                                 " exceeds 1");
            }
            return 1.0;
        }
        return v;
    }

    double mu_;
    double eta_;
    double nu_;
};

/// Score S = mu - nu, the primary ranking key.
inline double score(const Pfn& a) { return a.mu() - a.nu(); }

/// First accuracy H1 = mu + nu.
inline double accuracy1(const Pfn& a) { return a.mu() + a.nu(); }

/// Second accuracy H2 = mu + eta + nu = 1 - refusal.
inline double accuracy2(const Pfn& a) { return a.mu() + a.eta() + a.nu(); }

inline double refusal(const Pfn& a) { return a.refusal(); }

namespace detail {

/// Ranking keys are compared after rounding to 12 decimal digits, so floating
/// noise below 1e-12 cannot flip a tie-break branch. All keys lie in [-1, 1],
/// so the scaled value fits an int64 exactly.
inline std::int64_t order_key(double v) {
    return std::llround(v * 1e12);
}

}  // namespace detail

/// Total (linear) order on picture fuzzy numbers: lexicographic on
/// (S, H1, H2). Equality of all three keys pins the components themselves,
/// so `equal` really is equality up to the rounding scheme.
inline std::strong_ordering wu_compare(const Pfn& a, const Pfn& b) {
    if (auto c = detail::order_key(score(a)) <=> detail::order_key(score(b)); c != 0) return c;
    if (auto c = detail::order_key(accuracy1(a)) <=> detail::order_key(accuracy1(b)); c != 0) {
        return c;
    }
    return detail::order_key(accuracy2(a)) <=> detail::order_key(accuracy2(b));
}

/// Rendering at the 4-decimal report precision: "\u27e80.3749, 0.5173, 0.0774\u27e9".
inline std::string to_display(const Pfn& a, int precision = 4) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "\u27e8%.*f, %.*f, %.*f\u27e9", precision, a.mu(),
                  precision, a.eta(), precision, a.nu());
    return buf;
}

}  // namespace pfbm
