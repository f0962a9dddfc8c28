#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pfbm/bonferroni.hpp"
#include "pfbm/mcdm.hpp"
#include "pfbm/pfn.hpp"
#include "pfbm/tnorm.hpp"

namespace pfbm {

/// The bundled ERP-selection case study: five candidate systems evaluated
/// against four benefit criteria (function & technology, strategic fitness,
/// vendor ability, vendor reputation) with weights (0.2, 0.1, 0.3, 0.4).
/// Reference results for this problem across several t-norm families are
/// frozen below and exercised by the `selfcheck` command.
inline DecisionProblem erp_case_study() {
    std::vector<std::string> alternatives{"A1", "A2", "A3", "A4", "A5"};
    std::vector<Criterion> criteria{{"G1", Orientation::Benefit},
                                    {"G2", Orientation::Benefit},
                                    {"G3", Orientation::Benefit},
                                    {"G4", Orientation::Benefit}};
    std::vector<std::vector<Pfn>> matrix{
        {{0.53, 0.33, 0.09}, {0.89, 0.08, 0.03}, {0.42, 0.35, 0.18}, {0.08, 0.89, 0.02}},
        {{0.73, 0.12, 0.08}, {0.13, 0.64, 0.21}, {0.03, 0.82, 0.13}, {0.73, 0.15, 0.08}},
        {{0.91, 0.03, 0.02}, {0.07, 0.09, 0.05}, {0.04, 0.85, 0.10}, {0.68, 0.26, 0.06}},
        {{0.85, 0.09, 0.05}, {0.74, 0.16, 0.10}, {0.02, 0.89, 0.05}, {0.08, 0.84, 0.06}},
        {{0.90, 0.05, 0.02}, {0.68, 0.08, 0.21}, {0.05, 0.87, 0.06}, {0.13, 0.75, 0.09}},
    };
    return DecisionProblem(std::move(alternatives), std::move(criteria), std::move(matrix),
                           WeightVector({0.2, 0.1, 0.3, 0.4}));
}

struct GoldenCheck {
    std::string name;
    bool passed;
    std::string detail;  ///< observed vs expected when failed, empty otherwise
};

namespace golden {

struct PfnTriple {
    double mu, eta, nu;
};

/// Reference results at p = q = 1, gamma = 2, one block per family.
struct FamilyReference {
    TNormFamily family;
    double gamma;
    std::array<PfnTriple, 5> aggregates;
    std::array<double, 5> scores;
    const char* chain;
};

inline const std::array<FamilyReference, 4>& family_references() {
    static const std::array<FamilyReference, 4> refs{{
        {TNormFamily::Hamacher,
         2.0,
         {{{0.3749, 0.5173, 0.0774},
           {0.4403, 0.4093, 0.1079},
           {0.4789, 0.3357, 0.0598},
           {0.2901, 0.6297, 0.0587},
           {0.3295, 0.5697, 0.0732}}},
         {0.2975, 0.3324, 0.4191, 0.2313, 0.2563},
         "A3 > A2 > A1 > A5 > A4"},
        {TNormFamily::Frank,
         2.0,
         {{{0.3672, 0.5241, 0.0779},
           {0.4369, 0.4114, 0.1080},
           {0.4750, 0.3296, 0.0599},
           {0.2806, 0.6396, 0.0587},
           {0.3171, 0.5820, 0.0733}}},
         {0.2893, 0.3289, 0.4151, 0.2219, 0.2438},
         "A3 > A2 > A1 > A5 > A4"},
        {TNormFamily::Dombi,
         2.0,
         {{{0.3639, 0.5385, 0.0606},
           {0.5669, 0.2601, 0.1053},
           {0.5871, 0.1807, 0.0599},
           {0.4399, 0.4979, 0.0579},
           {0.3939, 0.5094, 0.0699}}},
         {0.3033, 0.4616, 0.5272, 0.3819, 0.3240},
         "A3 > A2 > A4 > A5 > A1"},
        {TNormFamily::AczelAlsina,
         2.0,
         {{{0.3718, 0.5102, 0.0852},
           {0.5160, 0.3238, 0.1097},
           {0.5393, 0.2353, 0.0637},
           {0.3640, 0.5723, 0.0591},
           {0.3493, 0.5542, 0.0775}}},
         {0.2865, 0.4062, 0.4756, 0.3049, 0.2717},
         "A3 > A2 > A4 > A1 > A5"},
    }};
    return refs;
}

struct PqReference {
    double p, q;
    const char* chain;
};

/// Ranking chains under Hamacher gamma = 2 across exponent choices; the top
/// alternative stays A3 throughout.
inline const std::array<PqReference, 7>& pq_references() {
    static const std::array<PqReference, 7> refs{{
        {2, 1, "A3 > A2 > A1 > A5 > A4"},
        {1, 2, "A3 > A2 > A1 > A5 > A4"},
        {3, 1, "A3 > A2 > A5 > A4 > A1"},
        {7, 2, "A3 > A5 > A4 > A1 > A2"},
        {8, 1, "A3 > A5 > A1 > A4 > A2"},
        {6, 9, "A3 > A4 > A5 > A2 > A1"},
        {10, 10, "A3 > A4 > A5 > A2 > A1"},
    }};
    return refs;
}

/// The weighted (non-normalized) mean applied to two copies of <1/3,1/3,1/3>
/// with weights (1/3, 2/3) under the product t-norm: the output differs from
/// the input, pinning non-idempotency as a regression fact.
struct CounterexampleReference {
    PfnTriple expected{0.17304, 0.22599, 0.60097};
    double tolerance = 1e-5;
};

inline std::string format6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline GoldenCheck check_pfn(const std::string& name, const Pfn& actual,
                             const PfnTriple& expected, double tol) {
    const bool ok = std::abs(actual.mu() - expected.mu) <= tol &&
                    std::abs(actual.eta() - expected.eta) <= tol &&
                    std::abs(actual.nu() - expected.nu) <= tol;
    std::string detail;
    if (!ok) {
        detail = "observed <" + format6(actual.mu()) + ", " + format6(actual.eta()) + ", " +
                 format6(actual.nu()) + ">, expected <" + format6(expected.mu) + ", " +
                 format6(expected.eta) + ", " + format6(expected.nu) + "> within " +
                 format6(tol);
    }
    return {name, ok, detail};
}

inline GoldenCheck check_score(const std::string& name, double actual, double expected,
                               double tol) {
    const bool ok = std::abs(actual - expected) <= tol;
    std::string detail;
    if (!ok) {
        detail = "observed " + format6(actual) + ", expected " + format6(expected) +
                 " within " + format6(tol);
    }
    return {name, ok, detail};
}

inline GoldenCheck check_chain(const std::string& name, const std::string& actual,
                               const std::string& expected) {
    const bool ok = actual == expected;
    std::string detail;
    if (!ok) detail = "observed \"" + actual + "\", expected \"" + expected + "\"";
    return {name, ok, detail};
}

}  // namespace golden

/// Runs every frozen regression check on the bundled case study: the four
/// family reference blocks (aggregates at 1e-4, scores at 1e-4, chains
/// exact), the seven exponent-sweep chains, and the non-idempotency
/// counterexample at 1e-5.
inline std::vector<GoldenCheck> run_golden_suite() {
    std::vector<GoldenCheck> checks;
    const DecisionProblem problem = erp_case_study();
    const BonferroniParams unit(1.0, 1.0);

    for (const auto& ref : golden::family_references()) {
        const TNormSpec spec(ref.family, ref.gamma);
        const std::string tag(family_name(ref.family));
        const RankingResult result = rank(problem, spec, unit);

        // Re-key results by original row so expectations line up.
        std::array<const RankedAlternative*, 5> by_row{};
        for (const auto& r : result.by_rank) by_row[r.index] = &r;

        for (std::size_t i = 0; i < 5; ++i) {
            checks.push_back(golden::check_pfn(
                tag + " gamma=2 aggregate r" + std::to_string(i + 1), by_row[i]->aggregate,
                ref.aggregates[i], 1e-4));
        }
        for (std::size_t i = 0; i < 5; ++i) {
            checks.push_back(golden::check_score(
                tag + " gamma=2 score S(r" + std::to_string(i + 1) + ")", by_row[i]->score,
                ref.scores[i], 1e-4));
        }
        checks.push_back(golden::check_chain(tag + " gamma=2 ranking", result.chain(),
                                             ref.chain));
    }

    const TNormSpec einstein(TNormFamily::Hamacher, 2.0);
    for (const auto& ref : golden::pq_references()) {
        const RankingResult result =
            rank(problem, einstein, BonferroniParams(ref.p, ref.q));
        const std::string tag = "hamacher gamma=2 p=" + golden::format6(ref.p) +
                                " q=" + golden::format6(ref.q);
        checks.push_back(golden::check_chain(tag + " ranking", result.chain(), ref.chain));
        checks.push_back(golden::check_chain(tag + " best", result.best().name, "A3"));
    }

    {
        const golden::CounterexampleReference ref;
        const Pfn third(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
        const std::vector<Pfn> inputs{third, third};
        const Pfn actual = pfiwbm(TNormSpec::product(), unit,
                                  WeightVector({1.0 / 3.0, 2.0 / 3.0}), inputs);
        checks.push_back(golden::check_pfn("weighted-mean non-idempotency counterexample",
                                           actual, ref.expected, ref.tolerance));
        checks.push_back({"counterexample differs from constant input",
                          wu_compare(actual, third) != std::strong_ordering::equal, ""});
    }

    return checks;
}

}  // namespace pfbm
