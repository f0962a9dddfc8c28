#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "pfbm/errors.hpp"
#include "pfbm/extended_real.hpp"
#include "pfbm/operations.hpp"
#include "pfbm/pfn.hpp"
#include "pfbm/tnorm.hpp"

namespace pfbm {

/// Exponent pair of a Bonferroni mean; both strictly positive for the
/// picture fuzzy aggregators (the crisp reference alone admits p or q = 0).
class BonferroniParams {
public:
    BonferroniParams(double p, double q) : p_(p), q_(q) {
        if (!(std::isfinite(p) && p > 0.0) || !(std::isfinite(q) && q > 0.0)) {
            throw DomainError("Bonferroni exponents must be finite and positive, got p = " +
                              std::to_string(p) + ", q = " + std::to_string(q));
        }
    }

    double p() const { return p_; }
    double q() const { return q_; }

private:
    double p_;
    double q_;
};

/// A criterion weight vector: every entry in (0, 1], entries summing to 1
/// within 1e-9. Construction rescales by the actual sum so the stored
/// weights sum to 1 at working precision.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
        if (w_.empty()) throw InvalidWeights("weight vector is empty");
        double sum = 0.0;
        for (double w : w_) {
            if (!(w > 0.0 && w <= 1.0)) {
                throw InvalidWeights("weight " + std::to_string(w) +
                                     " outside (0, 1]");
            }
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw InvalidWeights("weights sum to " + std::to_string(sum) +
                                 ", expected 1");
        }
        for (double& w : w_) w /= sum;
    }

    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    std::span<const double> values() const { return w_; }

private:
    std::vector<double> w_;
};

/// The crisp Bonferroni mean
///   [ 1/(n(n-1)) sum_{i != j} x_i^p x_j^q ]^{1/(p+q)},
/// kept as the scalar reference the picture fuzzy aggregators generalize.
/// Requires n >= 2, x_i >= 0 and p, q >= 0 with p + q > 0.
inline double crisp_bm(double p, double q, std::span<const double> xs) {
    if (!(p >= 0.0 && q >= 0.0 && p + q > 0.0)) {
        throw DomainError("crisp_bm requires p, q >= 0 with p + q > 0");
    }
    if (xs.size() < 2) {
        throw TooFewElements("crisp_bm needs at least two elements, got " +
                             std::to_string(xs.size()));
    }
    for (double x : xs) {
        if (!(x >= 0.0)) throw DomainError("crisp_bm elements must be nonnegative");
    }
    const std::size_t n = xs.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            sum += std::pow(xs[i], p) * std::pow(xs[j], q);
        }
    }
    sum /= static_cast<double>(n * (n - 1));
    return std::pow(sum, 1.0 / (p + q));
}

namespace detail {

/// Per-element generator images shared by every ordered pair the element
/// participates in. The eta channel is carried as the decrement
/// tau(mu) - tau(eta + mu), which keeps its full relative precision even
/// when eta is many orders below mu.
struct ElementGenerators {
    ExtendedReal gen_mu;     // tau(mu)
    ExtendedReal gen_joint;  // tau(eta + mu)
    ExtendedReal gen_delta;  // tau(mu) - tau(eta + mu)
    ExtendedReal co_nu;      // zeta(nu)
};

inline std::vector<ElementGenerators> element_generators(const TNormSpec& spec,
                                                         std::span<const Pfn> xs) {
    std::vector<ElementGenerators> gs;
    gs.reserve(xs.size());
    for (const Pfn& a : xs) {
        const double eta = std::min(a.eta(), 1.0 - a.mu());
        gs.push_back({generator(spec, a.mu()),
                      generator(spec, clamp01(a.eta() + a.mu())),
                      generator_decrement(spec, a.mu(), 1.0 - a.mu(), eta),
                      cogenerator(spec, a.nu())});
    }
    return gs;
}

/// The shared Bonferroni skeleton: a coefficient-weighted generator-space sum
/// of the pair terms x_i^p (x) x_j^q over all ordered pairs i != j, followed
/// by the closing 1/(p+q) power. The pair loop accumulates in fixed index
/// order (i ascending, then j), so results are reproducible; the sums
/// themselves are order-independent up to rounding.
///
/// The mu and nu channels stay in generator space end to end (via the cross
/// map), and the middle channel carries both the pair's eta + nu and its
/// complement, so precision survives the closing root even when intermediate
/// values hug 0 or 1.
template <typename CoeffFn>
Pfn bm_kernel(const TNormSpec& spec, const BonferroniParams& params, std::span<const Pfn> xs,
              CoeffFn&& coefficient) {
    const std::size_t n = xs.size();
    if (n < 2) {
        throw TooFewElements("Bonferroni aggregation needs at least two elements, got " +
                             std::to_string(n));
    }
    const double p = params.p();
    const double q = params.q();
    const auto gs = element_generators(spec, xs);

    ExtendedReal acc_mu;     // sum of c_ij zeta(mu of pair term)
    ExtendedReal acc_nu;     // sum of c_ij tau(nu of pair term)
    ExtendedReal acc_delta;  // sum of c_ij [tau(nu) - tau(eta + nu)] of pair terms
    ExtendedReal acc_joint;  // sum of c_ij tau(eta + nu), kept for the inf edges
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double c = coefficient(i, j);
            const ExtendedReal g_mu = p * gs[i].gen_mu + q * gs[j].gen_mu;
            const ExtendedReal g_joint = p * gs[i].gen_joint + q * gs[j].gen_joint;
            const ExtendedReal g_nu = p * gs[i].co_nu + q * gs[j].co_nu;

            acc_mu += c * cross_generator(spec, g_mu);
            acc_nu += c * cross_generator(spec, g_nu);

            // eta of the pair term, recovered through decrements so tiny
            // neutral degrees survive the exponent scaling
            const ExtendedReal g_delta = p * gs[i].gen_delta + q * gs[j].gen_delta;
            const double pair_eta =
                g_delta.is_infinite()
                    ? generator_inv(spec, g_joint) - generator_inv(spec, g_mu)
                    : inverse_decrement(spec, g_joint, g_delta);
            const double pair_nu = cogenerator_inv(spec, g_nu);
            const double pair_co_nu = generator_inv(spec, g_nu);  // 1 - nu of pair
            const ExtendedReal pair_delta = generator_decrement(
                spec, pair_nu, pair_co_nu, std::min(pair_eta, pair_co_nu));
            acc_delta += c * pair_delta;
            acc_joint += c * generator_at(spec,
                                          clamp01(pair_eta + pair_nu),
                                          clamp01(pair_co_nu - pair_eta));
        }
    }

    const double r = 1.0 / (p + q);
    const double mu = generator_inv(spec, r * cross_generator(spec, acc_mu));
    const double nu = cogenerator_inv(spec, r * cross_generator(spec, acc_nu));

    // eta* = tau^{-1}(acc_nu - acc_delta) - tau^{-1}(acc_nu). The base comes
    // from the subtraction acc_nu - acc_delta while that is cancellation-free
    // and from the directly accumulated joint channel otherwise.
    const double eta_star = [&] {
        if (acc_delta.is_infinite() || acc_nu.is_infinite()) {
            return generator_inv(spec, acc_joint) - generator_inv(spec, acc_nu);
        }
        const ExtendedReal base =
            acc_delta.value() > 0.5 * acc_nu.value()
                ? acc_joint
                : ExtendedReal(acc_nu.value() - acc_delta.value());
        return inverse_decrement(spec, base, acc_delta);
    }();

    const double mu_star = cogenerator_inv(spec, acc_mu);
    const double co_mu_star = generator_inv(spec, acc_mu);  // 1 - mu*
    const ExtendedReal tau_mu_star = cross_generator(spec, acc_mu);
    const ExtendedReal final_delta =
        generator_decrement(spec, mu_star, co_mu_star, std::min(eta_star, co_mu_star));

    double eta;
    if (tau_mu_star.is_infinite() || final_delta.is_infinite()) {
        // mu* = 0, so the joint channel is eta* alone
        const double joint =
            generator_inv(spec, r * generator(spec, clamp01(eta_star + mu_star)));
        eta = joint - mu;
    } else {
        // eta out = tau^{-1}(r tau(eta* + mu*)) - tau^{-1}(r tau(mu*)), with
        // tau(eta* + mu*) evaluated directly once the decrement would cancel
        const ExtendedReal tau_joint =
            final_delta.value() > 0.5 * tau_mu_star.value()
                ? generator_at(spec, clamp01(eta_star + mu_star),
                               clamp01(co_mu_star - eta_star))
                : ExtendedReal(tau_mu_star.value() - final_delta.value());
        eta = inverse_decrement(spec, r * tau_joint, r * final_delta);
    }
    return Pfn(mu, eta, nu);
}

}  // namespace detail

/// The pair term a^p (x) b^q in its fused generator-space form:
/// < tau^{-1}(p tau(mu_a) + q tau(mu_b)),
///   tau^{-1}(p tau(eta_a+mu_a) + q tau(eta_b+mu_b)) - tau^{-1}(p tau(mu_a) + q tau(mu_b)),
///   zeta^{-1}(p zeta(nu_a) + q zeta(nu_b)) >.
inline Pfn pair_term(const TNormSpec& spec, const BonferroniParams& params, const Pfn& a,
                     const Pfn& b) {
    const double p = params.p();
    const double q = params.q();
    const double mu = generator_inv(
        spec, p * generator(spec, a.mu()) + q * generator(spec, b.mu()));
    const double joint = generator_inv(
        spec, p * generator(spec, detail::clamp01(a.eta() + a.mu())) +
                  q * generator(spec, detail::clamp01(b.eta() + b.mu())));
    const double nu = cogenerator_inv(
        spec, p * cogenerator(spec, a.nu()) + q * cogenerator(spec, b.nu()));
    return Pfn(mu, joint - mu, nu);
}

/// Picture fuzzy interactional Bonferroni mean:
///   [ 1/(n(n-1)) (+)_{i != j} (x_i^p (x) x_j^q) ]^{1/(p+q)}.
/// Idempotent, monotone in the linear order, bounded, and invariant under
/// input permutations.
inline Pfn pfibm(const TNormSpec& spec, const BonferroniParams& params,
                 std::span<const Pfn> xs) {
    const double c = 1.0 / static_cast<double>(xs.size() * (xs.size() - 1));
    return detail::bm_kernel(spec, params, xs,
                             [c](std::size_t, std::size_t) { return c; });
}

/// Weighted variant: the inputs are first scaled as w_i . x_i, then fed to
/// the equal-coefficient skeleton. Deliberately not idempotent: scaling a
/// constant input by non-uniform weights changes it.
inline Pfn pfiwbm(const TNormSpec& spec, const BonferroniParams& params,
                  const WeightVector& weights, std::span<const Pfn> xs) {
    if (weights.size() != xs.size()) {
        throw LengthMismatch("pfiwbm: " + std::to_string(weights.size()) + " weights for " +
                             std::to_string(xs.size()) + " elements");
    }
    if (xs.size() < 2) {
        throw TooFewElements("pfiwbm needs at least two elements, got " +
                             std::to_string(xs.size()));
    }
    std::vector<Pfn> scaled;
    scaled.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        scaled.push_back(pfn_scalar(spec, weights[i], xs[i]));
    }
    return pfibm(spec, params, scaled);
}

/// Normalized weighted variant:
///   [ (+)_{i != j} (w_i w_j / (1 - w_i)) . (x_i^p (x) x_j^q) ]^{1/(p+q)}.
/// The coefficients sum to 1 analytically, which restores idempotency while
/// keeping the weights.
inline Pfn pfinwbm(const TNormSpec& spec, const BonferroniParams& params,
                   const WeightVector& weights, std::span<const Pfn> xs) {
    if (weights.size() != xs.size()) {
        throw LengthMismatch("pfinwbm: " + std::to_string(weights.size()) + " weights for " +
                             std::to_string(xs.size()) + " elements");
    }
    if (xs.size() < 2) {
        throw TooFewElements("pfinwbm needs at least two elements, got " +
                             std::to_string(xs.size()));
    }
    double coeff_sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] >= 1.0) {
            throw DegenerateWeight("pfinwbm: weight " + std::to_string(weights[i]) +
                                   " at index " + std::to_string(i) +
                                   " leaves 1 - w = 0");
        }
        for (std::size_t j = 0; j < weights.size(); ++j) {
            if (i != j) coeff_sum += weights[i] * weights[j] / (1.0 - weights[i]);
        }
    }
    if (std::abs(coeff_sum - 1.0) > 1e-9) {
        throw InvalidWeights("pfinwbm: normalized coefficients sum to " +
                             std::to_string(coeff_sum) + ", expected 1");
    }
    return detail::bm_kernel(spec, params, xs, [&](std::size_t i, std::size_t j) {
        return weights[i] * weights[j] / (1.0 - weights[i]);
    });
}

}  // namespace pfbm
