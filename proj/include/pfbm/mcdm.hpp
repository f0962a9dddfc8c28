#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pfbm/bonferroni.hpp"
#include "pfbm/errors.hpp"
#include "pfbm/pfn.hpp"
#include "pfbm/tnorm.hpp"

namespace pfbm {

enum class Orientation { Benefit, Cost };

inline std::string_view orientation_name(Orientation o) {
    return o == Orientation::Benefit ? "benefit" : "cost";
}

inline Orientation parse_orientation(std::string_view s) {
    if (s == "benefit") return Orientation::Benefit;
    if (s == "cost") return Orientation::Cost;
    throw DomainError("unknown criterion orientation \"" + std::string(s) +
                      "\" (expected benefit or cost)");
}

struct Criterion {
    std::string name;
    Orientation orientation = Orientation::Benefit;
};

/// An m x n multi-criteria decision problem: m alternatives evaluated
/// against n weighted criteria, each evaluation a picture fuzzy number.
class DecisionProblem {
public:
    DecisionProblem(std::vector<std::string> alternatives, std::vector<Criterion> criteria,
                    std::vector<std::vector<Pfn>> matrix, WeightVector weights)
        : alternatives_(std::move(alternatives)),
          criteria_(std::move(criteria)),
          matrix_(std::move(matrix)),
          weights_(std::move(weights)) {
        if (alternatives_.empty()) {
            throw DegenerateProblem("a decision problem needs at least one alternative");
        }
        if (weights_.size() != criteria_.size()) {
            throw LengthMismatch("problem has " + std::to_string(criteria_.size()) +
                                 " criteria but " + std::to_string(weights_.size()) +
                                 " weights");
        }
        if (matrix_.size() != alternatives_.size()) {
            throw LengthMismatch("matrix has " + std::to_string(matrix_.size()) +
                                 " rows for " + std::to_string(alternatives_.size()) +
                                 " alternatives");
        }
        for (std::size_t i = 0; i < matrix_.size(); ++i) {
            if (matrix_[i].size() != criteria_.size()) {
                throw LengthMismatch("matrix row " + std::to_string(i) + " has " +
                                     std::to_string(matrix_[i].size()) + " cells for " +
                                     std::to_string(criteria_.size()) + " criteria");
            }
        }
    }

    std::size_t alternative_count() const { return alternatives_.size(); }
    std::size_t criterion_count() const { return criteria_.size(); }

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<Criterion>& criteria() const { return criteria_; }
    const std::vector<std::vector<Pfn>>& matrix() const { return matrix_; }
    const WeightVector& weights() const { return weights_; }

    const Pfn& cell(std::size_t row, std::size_t col) const { return matrix_[row][col]; }

private:
    std::vector<std::string> alternatives_;
    std::vector<Criterion> criteria_;
    std::vector<std::vector<Pfn>> matrix_;
    WeightVector weights_;
};

/// Cost criteria are folded into benefit form by complementing each cell in
/// the column; afterwards every column is marked benefit, so the
/// transformation is idempotent.
inline DecisionProblem normalize(const DecisionProblem& problem) {
    auto criteria = problem.criteria();
    auto matrix = problem.matrix();
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        if (criteria[j].orientation == Orientation::Cost) {
            for (auto& row : matrix) row[j] = row[j].complement();
            criteria[j].orientation = Orientation::Benefit;
        }
    }
    return DecisionProblem(problem.alternatives(), std::move(criteria), std::move(matrix),
                           problem.weights());
}

/// One alternative's aggregate, score and final position (1-based).
struct RankedAlternative {
    std::size_t index;   ///< row in the original matrix
    std::string name;
    Pfn aggregate;
    double score;
    std::size_t rank;
};

struct RankingResult {
    /// Entries in ranking order, best first.
    std::vector<RankedAlternative> by_rank;

    /// "A3 > A2 > A1 > A5 > A4"
    std::string chain() const {
        std::string out;
        for (const auto& r : by_rank) {
            if (!out.empty()) out += " > ";
            out += r.name;
        }
        return out;
    }

    const RankedAlternative& best() const { return by_rank.front(); }
};

/// Full pipeline for one parameter point: normalize, aggregate each row with
/// the normalized weighted Bonferroni mean, and order the alternatives by
/// the linear order (score, then the two accuracies). Residual exact ties
/// keep input order.
inline RankingResult rank(const DecisionProblem& problem, const TNormSpec& spec,
                          const BonferroniParams& params) {
    if (problem.criterion_count() < 2) {
        throw DegenerateProblem("ranking needs at least two criteria, got " +
                                std::to_string(problem.criterion_count()));
    }
    const DecisionProblem normalized = normalize(problem);

    std::vector<RankedAlternative> entries;
    entries.reserve(normalized.alternative_count());
    for (std::size_t i = 0; i < normalized.alternative_count(); ++i) {
        Pfn aggregate = pfinwbm(spec, params, normalized.weights(), normalized.matrix()[i]);
        entries.push_back({i, normalized.alternatives()[i], aggregate, score(aggregate), 0});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const RankedAlternative& a, const RankedAlternative& b) {
                         return wu_compare(a.aggregate, b.aggregate) == std::strong_ordering::greater;
                     });
    for (std::size_t pos = 0; pos < entries.size(); ++pos) entries[pos].rank = pos + 1;
    return RankingResult{std::move(entries)};
}

/// One evaluated grid point of a (p, q) sweep.
struct PqSweepEntry {
    double p;
    double q;
    RankingResult ranking;
};

/// Evaluates rank() on the Cartesian grid, row-major in (p, q).
inline std::vector<PqSweepEntry> sweep_pq(const DecisionProblem& problem, const TNormSpec& spec,
                                          std::span<const double> p_grid,
                                          std::span<const double> q_grid) {
    if (p_grid.empty() || q_grid.empty()) {
        throw EmptyInput("sweep_pq: empty parameter grid");
    }
    std::vector<PqSweepEntry> out;
    out.reserve(p_grid.size() * q_grid.size());
    for (double p : p_grid) {
        for (double q : q_grid) {
            out.push_back({p, q, rank(problem, spec, BonferroniParams(p, q))});
        }
    }
    return out;
}

/// One evaluated (or skipped) grid point of a gamma sweep. Out-of-domain
/// gamma values are reported and skipped rather than aborting the sweep.
struct GammaSweepEntry {
    double gamma;
    bool skipped = false;
    std::string note;               ///< diagnostic when skipped
    RankingResult ranking;          ///< empty when skipped
};

inline std::vector<GammaSweepEntry> sweep_gamma(const DecisionProblem& problem,
                                                TNormFamily family,
                                                std::span<const double> gamma_grid,
                                                const BonferroniParams& params) {
    if (gamma_grid.empty()) throw EmptyInput("sweep_gamma: empty parameter grid");
    std::vector<GammaSweepEntry> out;
    out.reserve(gamma_grid.size());
    for (double gamma : gamma_grid) {
        GammaSweepEntry entry;
        entry.gamma = gamma;
        try {
            TNormSpec spec(family, gamma);
            entry.ranking = rank(problem, spec, params);
        } catch (const OutOfDomainGamma& e) {
            entry.skipped = true;
            entry.note = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace pfbm
