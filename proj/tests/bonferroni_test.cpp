#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "pfbm/bonferroni.hpp"
#include "closed_forms.hpp"
#include "support.hpp"

using namespace pfbm;
using pfbm_test::Rng;
using pfbm_test::pfn_close;

namespace {

std::vector<Pfn> random_list(Rng& rng, std::size_t n) {
    std::vector<Pfn> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(pfbm_test::random_pfn(rng));
    return xs;
}

/// Dominated pair: a_i <= b_i in all three channels (mu up, eta up, nu down).
std::pair<std::vector<Pfn>, std::vector<Pfn>> dominated_pair(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Pfn> lows, highs;
    for (std::size_t i = 0; i < n; ++i) {
        const Pfn b = pfbm_test::random_pfn(rng);
        const double mu = b.mu() * u(rng);
        const double eta = b.eta() * u(rng);
        const double nu = b.nu() + (1.0 - mu - eta - b.nu()) * u(rng);
        lows.emplace_back(mu, eta, nu);
        highs.push_back(b);
    }
    return {std::move(lows), std::move(highs)};
}

bool triple_close(const Pfn& a, const pfbm_test::Triple& t, double tol) {
    return std::abs(a.mu() - t[0]) <= tol && std::abs(a.eta() - t[1]) <= tol &&
           std::abs(a.nu() - t[2]) <= tol;
}

}  // namespace

TEST_CASE("parameter and weight validation") {
    CHECK_THROWS_AS(BonferroniParams(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(BonferroniParams(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(BonferroniParams(std::nan(""), 1.0), DomainError);
    CHECK_NOTHROW(BonferroniParams(0.5, 9.5));

    CHECK_THROWS_AS(WeightVector({0.5, 0.4}), InvalidWeights);          // sums to 0.9
    CHECK_THROWS_AS(WeightVector({0.5, 0.0, 0.5}), InvalidWeights);     // zero entry
    CHECK_THROWS_AS(WeightVector({1.2, -0.2}), InvalidWeights);         // out of (0, 1]
    CHECK_THROWS_AS(WeightVector(std::vector<double>{}), InvalidWeights);
    const WeightVector w({0.2, 0.1, 0.3, 0.4});
    CHECK(w.size() == 4);
    CHECK_THAT(std::accumulate(w.values().begin(), w.values().end(), 0.0),
               Catch::Matchers::WithinAbs(1.0, 1e-15));
}

TEST_CASE("crisp mean: constant input is a fixed point") {
    const std::vector<double> xs{0.7, 0.7, 0.7, 0.7};
    CHECK_THAT(crisp_bm(1.0, 1.0, xs), Catch::Matchers::WithinAbs(0.7, 1e-12));
    CHECK_THAT(crisp_bm(3.5, 0.5, xs), Catch::Matchers::WithinAbs(0.7, 1e-12));
}

TEST_CASE("crisp mean: single nonzero element vanishes from the cross terms") {
    // every product x_i^p x_j^q with i != j touches a zero
    const std::vector<double> xs{0.0, 0.0, 0.0, 0.9};
    CHECK(crisp_bm(1.0, 1.0, xs) == 0.0);
}

TEST_CASE("crisp mean: q = 0 reduces to the power mean") {
    Rng rng(53);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> len(2, 7);
        std::vector<double> xs(len(rng));
        for (double& x : xs) x = u(rng);
        for (double p : {1.0, 2.0, 3.0}) {
            double mean_p = 0.0;
            for (double x : xs) mean_p += std::pow(x, p);
            mean_p = std::pow(mean_p / xs.size(), 1.0 / p);
            CHECK_THAT(crisp_bm(p, 0.0, xs), Catch::Matchers::WithinAbs(mean_p, 1e-10));
        }
    }
}

TEST_CASE("crisp mean stays between min and max") {
    Rng rng(59);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    std::uniform_real_distribution<double> e(0.1, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> len(2, 7);
        std::vector<double> xs(len(rng));
        for (double& x : xs) x = u(rng);
        const double bm = crisp_bm(e(rng), e(rng), xs);
        CHECK(bm >= *std::min_element(xs.begin(), xs.end()) - 1e-12);
        CHECK(bm <= *std::max_element(xs.begin(), xs.end()) + 1e-12);
    }
}

TEST_CASE("crisp mean rejects bad input") {
    const std::vector<double> xs{0.5, 0.5};
    CHECK_THROWS_AS(crisp_bm(0.0, 0.0, xs), DomainError);
    CHECK_THROWS_AS(crisp_bm(1.0, 1.0, std::vector<double>{0.5}), TooFewElements);
    CHECK_THROWS_AS(crisp_bm(1.0, 1.0, std::vector<double>{0.5, -0.1}), DomainError);
}

TEST_CASE("pair term") {
    Rng rng(61);
    const BonferroniParams unit(1.0, 1.0);
    // unit exponents under the product t-norm collapse to plain multiplication
    for (int k = 0; k < 30; ++k) {
        const Pfn a = pfbm_test::random_pfn(rng);
        const Pfn b = pfbm_test::random_pfn(rng);
        CHECK(pfn_close(pair_term(TNormSpec::product(), unit, a, b),
                        pfn_mul(TNormSpec::product(), a, b), 1e-12));
    }
    // general case matches the composed power-product oracle
    std::uniform_real_distribution<double> e(0.1, 6.0);
    for (int k = 0; k < 300; ++k) {
        const TNormSpec spec = pfbm_test::random_spec(rng);
        const BonferroniParams bp(e(rng), e(rng));
        const Pfn a = pfbm_test::random_pfn(rng);
        const Pfn b = pfbm_test::random_pfn(rng);
        INFO(spec.name() << " gamma=" << spec.gamma() << " p=" << bp.p() << " q=" << bp.q());
        CHECK(pfn_close(pair_term(spec, bp, a, b),
                        pfbm_test::pair_term_oracle(spec, bp, a, b), 1e-10));
    }
    // a squared via the pair term
    for (const auto& spec : pfbm_test::one_spec_per_family()) {
        const Pfn a = pfbm_test::random_pfn(rng);
        CHECK(pfn_close(pair_term(spec, unit, a, a), pfn_power(spec, a, 2.0), 1e-10));
    }
}

TEST_CASE("interactional mean is idempotent") {
    Rng rng(67);
    for (const auto& spec : pfbm_test::one_spec_per_family()) {
        for (int trial = 0; trial < 30; ++trial) {
            const Pfn a = pfbm_test::random_pfn(rng);
            std::uniform_int_distribution<std::size_t> len(2, 6);
            std::uniform_real_distribution<double> e(0.1, 6.0);
            const std::vector<Pfn> xs(len(rng), a);
            const BonferroniParams bp(e(rng), e(rng));
            INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << xs.size()
                             << " p=" << bp.p() << " q=" << bp.q());
            CHECK(pfn_close(pfibm(spec, bp, xs), a, 1e-9));
        }
    }
}

TEST_CASE("interactional mean matches its definition oracle") {
    Rng rng(71);
    std::uniform_real_distribution<double> e(0.1, 6.0);
    int accepted = 0;
    for (int trial = 0; trial < 300 && accepted < 250; ++trial) {
        const TNormSpec spec = pfbm_test::random_spec(rng);
        std::uniform_int_distribution<std::size_t> len(2, 5);
        const auto xs = random_list(rng, len(rng));
        const BonferroniParams bp(e(rng), e(rng));
        INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << xs.size());
        pfbm_test::OracleGuard guard;
        const Pfn oracle = pfbm_test::pfibm_oracle(spec, bp, xs, &guard);
        if (!guard.representable()) continue;  // reference left double range
        ++accepted;
        CHECK(pfn_close(pfibm(spec, bp, xs), oracle, 1e-9));
    }
    CHECK(accepted >= 250);
    const std::vector<Pfn> one{Pfn(0.5, 0.2, 0.1)};
    CHECK_THROWS_AS(pfibm(TNormSpec::product(), BonferroniParams(1, 1), one),
                    TooFewElements);
}

TEST_CASE("generic pipeline reproduces the per-family closed forms") {
    Rng rng(73);
    std::uniform_real_distribution<double> e(0.25, 4.0);
    std::uniform_int_distribution<std::size_t> len(2, 5);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Pfn> xs;
        const std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) xs.push_back(pfbm_test::random_interior_pfn(rng));
        const double p = e(rng), q = e(rng);
        const BonferroniParams bp(p, q);

        {
            const Pfn got = pfibm(TNormSpec::product(), bp, xs);
            CHECK(triple_close(got, pfbm_test::pfibm_product_closed(p, q, xs), 1e-8));
        }
        {
            const double g = -e(rng);
            const Pfn got = pfibm(TNormSpec(TNormFamily::SchweizerSklar, g), bp, xs);
            CHECK(triple_close(got, pfbm_test::pfibm_schweizer_sklar_closed(g, p, q, xs), 1e-8));
        }
        {
            const double g = e(rng);
            const Pfn got = pfibm(TNormSpec(TNormFamily::Hamacher, g), bp, xs);
            CHECK(triple_close(got, pfbm_test::pfibm_hamacher_closed(g, p, q, xs), 1e-8));
        }
        {
            double g = e(rng);
            while (std::abs(g - 1.0) < 0.1) g = e(rng);
            const Pfn got = pfibm(TNormSpec(TNormFamily::Frank, g), bp, xs);
            CHECK(triple_close(got, pfbm_test::pfibm_frank_closed(g, p, q, xs), 1e-8));
        }
        {
            const double g = e(rng);
            const Pfn got = pfibm(TNormSpec(TNormFamily::Dombi, g), bp, xs);
            CHECK(triple_close(got, pfbm_test::pfibm_dombi_closed(g, p, q, xs), 1e-8));
        }
        {
            const double g = 0.7 + e(rng);
            const Pfn got = pfibm(TNormSpec(TNormFamily::AczelAlsina, g), bp, xs);
            CHECK(triple_close(got, pfbm_test::pfibm_aczel_alsina_closed(g, p, q, xs), 1e-8));
        }
    }
}

TEST_CASE("vanishing neutral memberships reduce to the two-channel forms") {
    Rng rng(79);
    std::uniform_real_distribution<double> e(0.25, 4.0);
    std::uniform_real_distribution<double> comp(0.02, 0.95);
    std::uniform_int_distribution<std::size_t> len(2, 5);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Pfn> xs;
        const std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) {
            const double mu = comp(rng);
            const double nu = std::min(comp(rng), 0.98 - mu);
            xs.emplace_back(mu, 0.0, std::max(nu, 0.01));
        }
        const double p = e(rng), q = e(rng);
        const BonferroniParams bp(p, q);

        const Pfn prod = pfibm(TNormSpec::product(), bp, xs);
        CHECK(std::abs(prod.eta()) <= 1e-12);
        CHECK(triple_close(prod, pfbm_test::pfibm_product_ifn_closed(p, q, xs), 1e-8));

        const double g = e(rng);
        const Pfn dombi = pfibm(TNormSpec(TNormFamily::Dombi, g), bp, xs);
        CHECK(std::abs(dombi.eta()) <= 1e-12);
        CHECK(triple_close(dombi, pfbm_test::pfibm_dombi_ifn_closed(g, p, q, xs), 1e-8));
    }
}

TEST_CASE("weighted mean is deliberately not idempotent") {
    const double third = 1.0 / 3.0;
    const Pfn t(third, third, third);
    const std::vector<Pfn> xs{t, t};
    const WeightVector w({1.0 / 3.0, 2.0 / 3.0});
    const Pfn r = pfiwbm(TNormSpec::product(), BonferroniParams(1, 1), w, xs);
    CHECK_THAT(r.mu(), Catch::Matchers::WithinAbs(0.17304, 1e-5));
    CHECK_THAT(r.eta(), Catch::Matchers::WithinAbs(0.22599, 1e-5));
    CHECK_THAT(r.nu(), Catch::Matchers::WithinAbs(0.60097, 1e-5));
    CHECK(wu_compare(r, t) != std::strong_ordering::equal);
}

TEST_CASE("weighted mean with uniform weights differs from the unweighted mean") {
    Rng rng(83);
    const auto xs = random_list(rng, 3);
    const WeightVector uniform({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    const BonferroniParams bp(1.0, 1.0);
    const TNormSpec spec(TNormFamily::Hamacher, 2.0);
    const Pfn weighted = pfiwbm(spec, bp, uniform, xs);
    const Pfn plain = pfibm(spec, bp, xs);
    CHECK_FALSE(pfn_close(weighted, plain, 1e-3));  // the 1/n scaling stays in
}

TEST_CASE("weighted mean matches its definition oracle") {
    Rng rng(89);
    std::uniform_real_distribution<double> e(0.1, 6.0);
    int accepted = 0;
    for (int trial = 0; trial < 260 && accepted < 200; ++trial) {
        const TNormSpec spec = pfbm_test::random_spec(rng);
        std::uniform_int_distribution<std::size_t> len(2, 5);
        const std::size_t n = len(rng);
        const auto xs = random_list(rng, n);
        const WeightVector w = pfbm_test::random_weights(rng, n);
        const BonferroniParams bp(e(rng), e(rng));
        INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << n);
        pfbm_test::OracleGuard guard;
        const Pfn oracle = pfbm_test::pfiwbm_oracle(spec, bp, w, xs, &guard);
        if (!guard.representable()) continue;
        ++accepted;
        CHECK(pfn_close(pfiwbm(spec, bp, w, xs), oracle, 1e-9));
    }
    CHECK(accepted >= 200);
    const auto xs = random_list(rng, 3);
    CHECK_THROWS_AS(
        pfiwbm(TNormSpec::product(), BonferroniParams(1, 1), WeightVector({0.5, 0.5}), xs),
        LengthMismatch);
}

TEST_CASE("normalized weighted mean is idempotent") {
    Rng rng(97);
    for (const auto& spec : pfbm_test::one_spec_per_family()) {
        for (int trial = 0; trial < 25; ++trial) {
            const Pfn a = pfbm_test::random_pfn(rng);
            std::uniform_int_distribution<std::size_t> len(2, 6);
            std::uniform_real_distribution<double> e(0.1, 6.0);
            const std::size_t n = len(rng);
            const std::vector<Pfn> xs(n, a);
            const WeightVector w = pfbm_test::random_weights(rng, n);
            INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << n);
            CHECK(pfn_close(pfinwbm(spec, BonferroniParams(e(rng), e(rng)), w, xs), a, 1e-9));
        }
    }
}

TEST_CASE("normalized weighted mean matches its definition oracle") {
    Rng rng(101);
    std::uniform_real_distribution<double> e(0.1, 6.0);
    int accepted = 0;
    for (int trial = 0; trial < 260 && accepted < 200; ++trial) {
        const TNormSpec spec = pfbm_test::random_spec(rng);
        std::uniform_int_distribution<std::size_t> len(2, 5);
        const std::size_t n = len(rng);
        const auto xs = random_list(rng, n);
        const WeightVector w = pfbm_test::random_weights(rng, n);
        const BonferroniParams bp(e(rng), e(rng));
        INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << n);
        pfbm_test::OracleGuard guard;
        const Pfn oracle = pfbm_test::pfinwbm_oracle(spec, bp, w, xs, &guard);
        if (!guard.representable()) continue;
        ++accepted;
        CHECK(pfn_close(pfinwbm(spec, bp, w, xs), oracle, 1e-9));
    }
    CHECK(accepted >= 200);
}

TEST_CASE("normalized weighted mean reproduces the first case-study row") {
    const std::vector<Pfn> row{{0.53, 0.33, 0.09},
                               {0.89, 0.08, 0.03},
                               {0.42, 0.35, 0.18},
                               {0.08, 0.89, 0.02}};
    const WeightVector w({0.2, 0.1, 0.3, 0.4});
    const Pfn r = pfinwbm(TNormSpec(TNormFamily::Hamacher, 2.0), BonferroniParams(1, 1), w,
                          row);
    CHECK_THAT(r.mu(), Catch::Matchers::WithinAbs(0.3749, 1e-4));
    CHECK_THAT(r.eta(), Catch::Matchers::WithinAbs(0.5173, 1e-4));
    CHECK_THAT(r.nu(), Catch::Matchers::WithinAbs(0.0774, 1e-4));
}

TEST_CASE("normalized coefficients sum to one") {
    Rng rng(103);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> len(2, 8);
        const std::size_t n = len(rng);
        const WeightVector w = pfbm_test::random_weights(rng, n);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) sum += w[i] * w[j] / (1.0 - w[i]);
            }
        }
        CHECK_THAT(sum, Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("aggregators are monotone under dominated inputs") {
    Rng rng(107);
    std::uniform_real_distribution<double> e(0.1, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        const TNormSpec spec = pfbm_test::random_spec(rng);
        std::uniform_int_distribution<std::size_t> len(2, 5);
        const std::size_t n = len(rng);
        const auto [lows, highs] = dominated_pair(rng, n);
        const WeightVector w = pfbm_test::random_weights(rng, n);
        const BonferroniParams bp(e(rng), e(rng));
        INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << n);
        CHECK(wu_compare(pfibm(spec, bp, lows), pfibm(spec, bp, highs)) !=
              std::strong_ordering::greater);
        CHECK(wu_compare(pfiwbm(spec, bp, w, lows), pfiwbm(spec, bp, w, highs)) !=
              std::strong_ordering::greater);
        CHECK(wu_compare(pfinwbm(spec, bp, w, lows), pfinwbm(spec, bp, w, highs)) !=
              std::strong_ordering::greater);
    }
}

TEST_CASE("aggregates stay within the order bounds") {
    Rng rng(109);
    std::uniform_real_distribution<double> e(0.1, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        const TNormSpec spec = pfbm_test::random_spec(rng);
        std::uniform_int_distribution<std::size_t> len(2, 5);
        const std::size_t n = len(rng);
        const auto xs = random_list(rng, n);
        const WeightVector w = pfbm_test::random_weights(rng, n);
        const BonferroniParams bp(e(rng), e(rng));

        double min_mu = 1.0, min_eta = 1.0, max_mu = 0.0, min_nu = 1.0, max_nu = 0.0;
        for (const Pfn& x : xs) {
            min_mu = std::min(min_mu, x.mu());
            min_eta = std::min(min_eta, x.eta());
            max_mu = std::max(max_mu, x.mu());
            min_nu = std::min(min_nu, x.nu());
            max_nu = std::max(max_nu, x.nu());
        }
        const Pfn lower(min_mu, min_eta, max_nu);
        const Pfn upper(max_mu, 1.0 - (max_mu + min_nu), min_nu);

        for (const Pfn& agg : {pfibm(spec, bp, xs), pfinwbm(spec, bp, w, xs)}) {
            INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << n << " agg="
                             << to_display(agg, 6));
            CHECK(wu_compare(lower, agg) != std::strong_ordering::greater);
            CHECK(wu_compare(agg, upper) != std::strong_ordering::greater);
        }
    }
}

TEST_CASE("aggregators are permutation invariant") {
    Rng rng(113);
    std::uniform_real_distribution<double> e(0.1, 6.0);
    for (int trial = 0; trial < 150; ++trial) {
        const TNormSpec spec = pfbm_test::random_spec(rng);
        std::uniform_int_distribution<std::size_t> len(2, 5);
        const std::size_t n = len(rng);
        auto xs = random_list(rng, n);
        const WeightVector w = pfbm_test::random_weights(rng, n);
        const BonferroniParams bp(e(rng), e(rng));

        const Pfn base_plain = pfibm(spec, bp, xs);
        const Pfn base_weighted = pfiwbm(spec, bp, w, xs);
        const Pfn base_normalized = pfinwbm(spec, bp, w, xs);

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Pfn> pxs;
        std::vector<double> pw;
        for (std::size_t k : perm) {
            pxs.push_back(xs[k]);
            pw.push_back(w[k]);
        }
        const WeightVector pwv(std::move(pw));

        INFO(spec.name() << " gamma=" << spec.gamma() << " n=" << n);
        CHECK(pfn_close(pfibm(spec, bp, pxs), base_plain, 1e-9));
        CHECK(pfn_close(pfiwbm(spec, bp, pwv, pxs), base_weighted, 1e-9));
        CHECK(pfn_close(pfinwbm(spec, bp, pwv, pxs), base_normalized, 1e-9));
    }
}
