#pragma once

// Shared test utilities: deterministic random generation of PFNs, specs and
// weights, plus the definition-built oracles the fused implementations are
// checked against. The oracles compose binary operations only, never the
// single-pass generator-space forms they validate.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "pfbm/bonferroni.hpp"
#include "pfbm/operations.hpp"
#include "pfbm/pfn.hpp"
#include "pfbm/tnorm.hpp"

namespace pfbm_test {

using Rng = std::mt19937_64;

/// Uniform draw from the PFN simplex (three sorted uniform cuts of [0, 1]
/// give four exchangeable parts; three of them form the triple, the last is
/// the refusal degree).
inline pfbm::Pfn random_pfn(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<double, 3> cuts{u(rng), u(rng), u(rng)};
    std::sort(cuts.begin(), cuts.end());
    return pfbm::Pfn(cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1]);
}

/// Random PFN with all components bounded away from 0 and sum bounded away
/// from 1; needed where closed forms divide by a component.
inline pfbm::Pfn random_interior_pfn(Rng& rng) {
    std::uniform_real_distribution<double> u(0.02, 0.98);
    double mu = u(rng), eta = u(rng), nu = u(rng);
    const double sum = mu + eta + nu;
    const double scale = 0.96 / std::max(sum, 1.0);
    if (scale < 1.0) {
        mu *= scale;
        eta *= scale;
        nu *= scale;
    }
    mu = std::max(mu, 0.01);
    eta = std::max(eta, 0.01);
    nu = std::max(nu, 0.01);
    return pfbm::Pfn(mu, eta, nu);
}

/// Random PFN that often sits on the boundary of the simplex (exact zeros
/// and ones), exercising the tau(0) = +inf paths.
inline pfbm::Pfn random_boundary_pfn(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 5);
    switch (pick(rng)) {
        case 0: return pfbm::Pfn(1.0, 0.0, 0.0);
        case 1: return pfbm::Pfn(0.0, 0.0, 1.0);
        case 2: return pfbm::Pfn(0.0, 1.0, 0.0);
        case 3: {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double m = u(rng);
            return pfbm::Pfn(m, 0.0, 1.0 - m);
        }
        case 4: return pfbm::Pfn(0.0, 0.0, 0.0);
        default: return random_pfn(rng);
    }
}

/// Random family with an in-domain parameter. The bands cover the whole
/// range the case study and sweeps exercise, with margin; far outside them
/// double arithmetic saturates (generator magnitudes leave the exponent
/// range), which dedicated extreme-parameter tests cover separately.
inline pfbm::TNormSpec random_spec(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_real_distribution<double> mag(0.25, 5.0);
    std::uniform_real_distribution<double> aa_mag(0.7, 5.0);
    switch (pick(rng)) {
        case 0: return pfbm::TNormSpec::product();
        case 1: return {pfbm::TNormFamily::SchweizerSklar, -mag(rng)};
        case 2: return {pfbm::TNormFamily::Hamacher, mag(rng)};
        case 3: {
            double g = mag(rng);
            while (std::abs(g - 1.0) < 0.05) g = mag(rng);
            return {pfbm::TNormFamily::Frank, g};
        }
        case 4: return {pfbm::TNormFamily::Dombi, mag(rng)};
        default: return {pfbm::TNormFamily::AczelAlsina, aa_mag(rng)};
    }
}

/// One spec per family, nontrivial parameters, for exhaustive family loops.
inline std::vector<pfbm::TNormSpec> one_spec_per_family() {
    return {pfbm::TNormSpec::product(),
            {pfbm::TNormFamily::SchweizerSklar, -2.0},
            {pfbm::TNormFamily::Hamacher, 2.0},
            {pfbm::TNormFamily::Frank, 2.0},
            {pfbm::TNormFamily::Dombi, 2.0},
            {pfbm::TNormFamily::AczelAlsina, 2.0}};
}

inline pfbm::WeightVector random_weights(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
        v = u(rng);
        sum += v;
    }
    for (double& v : w) v /= sum;
    return pfbm::WeightVector(std::move(w));
}

inline bool pfn_close(const pfbm::Pfn& a, const pfbm::Pfn& b, double tol) {
    return std::abs(a.mu() - b.mu()) <= tol && std::abs(a.eta() - b.eta()) <= tol &&
           std::abs(a.nu() - b.nu()) <= tol;
}

// ---------------------------------------------------------------------------
// Fold oracles for the n-ary forms.
// ---------------------------------------------------------------------------

inline pfbm::Pfn fold_sum(const pfbm::TNormSpec& spec, std::span<const pfbm::Pfn> xs) {
    pfbm::Pfn acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = pfbm::pfn_add(spec, acc, xs[i]);
    return acc;
}

inline pfbm::Pfn fold_prod(const pfbm::TNormSpec& spec, std::span<const pfbm::Pfn> xs) {
    pfbm::Pfn acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = pfbm::pfn_mul(spec, acc, xs[i]);
    return acc;
}

inline pfbm::Pfn fold_weighted_sum(const pfbm::TNormSpec& spec, std::span<const double> w,
                                   std::span<const pfbm::Pfn> xs) {
    pfbm::Pfn acc = pfbm::pfn_scalar(spec, w[0], xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        acc = pfbm::pfn_add(spec, acc, pfbm::pfn_scalar(spec, w[i], xs[i]));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Definition-built aggregator oracles: the Bonferroni skeleton composed from
// the binary operations, kept deliberately naive.
//
// The composed route materializes every intermediate as a Pfn of doubles, so
// once some intermediate membership creeps within an ulp of 1 the reference
// itself stops carrying the information the comparison needs (the closing
// 1/(p+q) root would have to recover sub-ulp structure). The guard records
// the smallest distance-to-1 seen across intermediates; comparisons are only
// meaningful for draws it clears.
// ---------------------------------------------------------------------------

struct OracleGuard {
    double min_margin = 1.0;  // smallest distance-to-1 across intermediates
    double min_eta = 1.0;     // smallest neutral degree across intermediates

    const pfbm::Pfn& note(const pfbm::Pfn& a) {
        min_margin = std::min({min_margin, 1.0 - a.mu(), 1.0 - a.nu(),
                               1.0 - (a.mu() + a.eta()), 1.0 - (a.eta() + a.nu())});
        min_eta = std::min(min_eta, a.eta());
        return a;
    }

    // The composed route reads eta off differences of materialized values, so
    // its eta information degrades once intermediates carry eta (or their
    // complements) near the doubles' ulp; both floors are set with orders of
    // magnitude to spare against the 1e-9 comparison.
    bool representable() const { return min_margin >= 1e-8 && min_eta >= 1e-8; }
};

inline pfbm::Pfn pair_term_oracle(const pfbm::TNormSpec& spec, const pfbm::BonferroniParams& bp,
                                  const pfbm::Pfn& a, const pfbm::Pfn& b,
                                  OracleGuard* guard = nullptr) {
    OracleGuard local;
    OracleGuard& g = guard ? *guard : local;
    return g.note(pfbm::pfn_mul(spec, g.note(pfbm::pfn_power(spec, a, bp.p())),
                                g.note(pfbm::pfn_power(spec, b, bp.q()))));
}

inline pfbm::Pfn pfibm_oracle(const pfbm::TNormSpec& spec, const pfbm::BonferroniParams& bp,
                              std::span<const pfbm::Pfn> xs, OracleGuard* guard = nullptr) {
    OracleGuard local;
    OracleGuard& g = guard ? *guard : local;
    const std::size_t n = xs.size();
    std::vector<pfbm::Pfn> terms;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) terms.push_back(pair_term_oracle(spec, bp, xs[i], xs[j], &g));
        }
    }
    pfbm::Pfn acc = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k) {
        acc = g.note(pfbm::pfn_add(spec, acc, terms[k]));
    }
    const pfbm::Pfn mean =
        g.note(pfbm::pfn_scalar(spec, 1.0 / static_cast<double>(n * (n - 1)), acc));
    return g.note(pfbm::pfn_power(spec, mean, 1.0 / (bp.p() + bp.q())));
}

inline pfbm::Pfn pfiwbm_oracle(const pfbm::TNormSpec& spec, const pfbm::BonferroniParams& bp,
                               const pfbm::WeightVector& w, std::span<const pfbm::Pfn> xs,
                               OracleGuard* guard = nullptr) {
    OracleGuard local;
    OracleGuard& g = guard ? *guard : local;
    std::vector<pfbm::Pfn> scaled;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        scaled.push_back(g.note(pfbm::pfn_scalar(spec, w[i], xs[i])));
    }
    return pfibm_oracle(spec, bp, scaled, &g);
}

inline pfbm::Pfn pfinwbm_oracle(const pfbm::TNormSpec& spec, const pfbm::BonferroniParams& bp,
                                const pfbm::WeightVector& w, std::span<const pfbm::Pfn> xs,
                                OracleGuard* guard = nullptr) {
    OracleGuard local;
    OracleGuard& g = guard ? *guard : local;
    const std::size_t n = xs.size();
    std::vector<pfbm::Pfn> terms;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double c = w[i] * w[j] / (1.0 - w[i]);
            terms.push_back(g.note(
                pfbm::pfn_scalar(spec, c, pair_term_oracle(spec, bp, xs[i], xs[j], &g))));
        }
    }
    pfbm::Pfn acc = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k) {
        acc = g.note(pfbm::pfn_add(spec, acc, terms[k]));
    }
    return g.note(pfbm::pfn_power(spec, acc, 1.0 / (bp.p() + bp.q())));
}

}  // namespace pfbm_test
