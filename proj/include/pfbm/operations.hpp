#pragma once

#include <span>
#include <vector>

#include "pfbm/errors.hpp"
#include "pfbm/extended_real.hpp"
#include "pfbm/pfn.hpp"
#include "pfbm/tnorm.hpp"

namespace pfbm {

/// The four closed operations on picture fuzzy numbers induced by a strict
/// t-norm T with generator tau, dual t-conorm S and co-generator zeta.
/// Every operation returns a valid Pfn: closure holds exactly in real
/// arithmetic, and the Pfn constructor absorbs the floating residue.
///
/// Intermediate sums eta + nu and eta + mu live in [0, 1] mathematically but
/// may overshoot by an ulp; they are clamped before entering a generator.

/// a (+) b = < S(mu1, mu2), T(eta1+nu1, eta2+nu2) - T(nu1, nu2), T(nu1, nu2) >.
inline Pfn pfn_add(const TNormSpec& spec, const Pfn& a, const Pfn& b) {
    const double mu = tconorm(spec, a.mu(), b.mu());
    const double joint = tnorm(spec, detail::clamp01(a.eta() + a.nu()),
                               detail::clamp01(b.eta() + b.nu()));
    const double nu = tnorm(spec, a.nu(), b.nu());
    return Pfn(mu, joint - nu, nu);
}

/// a (x) b = < T(mu1, mu2), T(eta1+mu1, eta2+mu2) - T(mu1, mu2), S(nu1, nu2) >.
inline Pfn pfn_mul(const TNormSpec& spec, const Pfn& a, const Pfn& b) {
    const double mu = tnorm(spec, a.mu(), b.mu());
    const double joint = tnorm(spec, detail::clamp01(a.eta() + a.mu()),
                               detail::clamp01(b.eta() + b.mu()));
    const double nu = tconorm(spec, a.nu(), b.nu());
    return Pfn(mu, joint - mu, nu);
}

/// lambda . a = < zeta^{-1}(lambda zeta(mu)),
///               tau^{-1}(lambda tau(eta+nu)) - tau^{-1}(lambda tau(nu)),
///               tau^{-1}(lambda tau(nu)) >, lambda > 0.
inline Pfn pfn_scalar(const TNormSpec& spec, double lambda, const Pfn& a) {
    if (!(lambda > 0.0)) {
        throw DomainError("scalar multiplier must be positive, got " + std::to_string(lambda));
    }
    const double mu = cogenerator_inv(spec, lambda * cogenerator(spec, a.mu()));
    const double joint =
        generator_inv(spec, lambda * generator(spec, detail::clamp01(a.eta() + a.nu())));
    const double nu = generator_inv(spec, lambda * generator(spec, a.nu()));
    return Pfn(mu, joint - nu, nu);
}

/// a^lambda = < tau^{-1}(lambda tau(mu)),
///             tau^{-1}(lambda tau(eta+mu)) - tau^{-1}(lambda tau(mu)),
///             zeta^{-1}(lambda zeta(nu)) >, lambda > 0.
inline Pfn pfn_power(const TNormSpec& spec, const Pfn& a, double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("power exponent must be positive, got " + std::to_string(lambda));
    }
    const double mu = generator_inv(spec, lambda * generator(spec, a.mu()));
    const double joint =
        generator_inv(spec, lambda * generator(spec, detail::clamp01(a.eta() + a.mu())));
    const double nu = cogenerator_inv(spec, lambda * cogenerator(spec, a.nu()));
    return Pfn(mu, joint - mu, nu);
}

namespace detail {

struct GeneratorSums {
    ExtendedReal co_mu;     // sum of w zeta(mu)
    ExtendedReal joint;     // sum of w tau(eta + nu) resp. tau(eta + mu)
    ExtendedReal gen_nu;    // sum of w tau(nu) resp. zeta(nu)
};

}  // namespace detail

/// n-ary sum evaluated in a single generator-space pass:
/// < zeta^{-1}(sum zeta(mu_i)),
///   tau^{-1}(sum tau(eta_i+nu_i)) - tau^{-1}(sum tau(nu_i)),
///   tau^{-1}(sum tau(nu_i)) >.
/// Equivalent to a left fold of pfn_add but with fewer inversions.
inline Pfn pfn_sum(const TNormSpec& spec, std::span<const Pfn> xs) {
    if (xs.empty()) throw EmptyInput("pfn_sum of an empty sequence");
    detail::GeneratorSums s;
    for (const Pfn& a : xs) {
        s.co_mu += cogenerator(spec, a.mu());
        s.joint += generator(spec, detail::clamp01(a.eta() + a.nu()));
        s.gen_nu += generator(spec, a.nu());
    }
    const double nu = generator_inv(spec, s.gen_nu);
    return Pfn(cogenerator_inv(spec, s.co_mu), generator_inv(spec, s.joint) - nu, nu);
}

/// n-ary product, dual of pfn_sum.
inline Pfn pfn_prod(const TNormSpec& spec, std::span<const Pfn> xs) {
    if (xs.empty()) throw EmptyInput("pfn_prod of an empty sequence");
    detail::GeneratorSums s;
    for (const Pfn& a : xs) {
        s.co_mu += generator(spec, a.mu());
        s.joint += generator(spec, detail::clamp01(a.eta() + a.mu()));
        s.gen_nu += cogenerator(spec, a.nu());
    }
    const double mu = generator_inv(spec, s.co_mu);
    return Pfn(mu, generator_inv(spec, s.joint) - mu, cogenerator_inv(spec, s.gen_nu));
}

/// (+)_i w_i . x_i evaluated in one generator-space pass; equals the fold of
/// pfn_scalar followed by pfn_add.
inline Pfn weighted_sum(const TNormSpec& spec, std::span<const double> weights,
                        std::span<const Pfn> xs) {
    if (weights.size() != xs.size()) {
        throw LengthMismatch("weighted_sum: " + std::to_string(weights.size()) +
                             " weights for " + std::to_string(xs.size()) + " elements");
    }
    if (xs.empty()) throw EmptyInput("weighted_sum of an empty sequence");
    detail::GeneratorSums s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double w = weights[i];
        if (!(w > 0.0)) {
            throw DomainError("weighted_sum: weight " + std::to_string(w) +
                              " must be positive");
        }
        s.co_mu += w * cogenerator(spec, xs[i].mu());
        s.joint += w * generator(spec, detail::clamp01(xs[i].eta() + xs[i].nu()));
        s.gen_nu += w * generator(spec, xs[i].nu());
    }
    const double nu = generator_inv(spec, s.gen_nu);
    return Pfn(cogenerator_inv(spec, s.co_mu), generator_inv(spec, s.joint) - nu, nu);
}

}  // namespace pfbm
