// Command-line front end: rank a problem file, sweep parameters to CSV,
// validate inputs, or run the frozen regression suite.
//
// Exit codes: 0 success, 1 usage error, 2 data or domain error,
// 3 regression-check failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfbm/pfbm.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSelfcheck = 3;

struct TNormOptions {
    std::string family = "hamacher";
    double gamma = 2.0;

    pfbm::TNormSpec spec() const {
        return pfbm::TNormSpec(pfbm::parse_family(family), gamma);
    }
};

void add_tnorm_options(CLI::App& cmd, TNormOptions& opts) {
    cmd.add_option("--family", opts.family,
                   "t-norm family: product, schweizer-sklar, hamacher, frank, dombi, "
                   "aczel-alsina")
        ->capture_default_str();
    cmd.add_option("--gamma", opts.gamma, "family parameter (ignored for product)")
        ->capture_default_str();
}

int run_rank(const std::string& path, const TNormOptions& tnorm, double p, double q,
             const std::string& format) {
    const pfbm::DecisionProblem problem = pfbm::load_problem(path);
    const pfbm::RankingResult result =
        pfbm::rank(problem, tnorm.spec(), pfbm::BonferroniParams(p, q));
    const pfbm::ReportTable table = pfbm::ranking_report(result);
    if (format == "csv") {
        table.render_csv(std::cout);
    } else {
        table.render_text(std::cout);
        std::cout << "\nranking: " << result.chain() << "\n";
    }
    return 0;
}

int run_sweep(const std::string& path, const TNormOptions& tnorm, double p, double q,
              const std::string& p_grid, const std::string& q_grid,
              const std::string& gamma_grid, const std::string& out_path) {
    const pfbm::DecisionProblem problem = pfbm::load_problem(path);

    pfbm::ReportTable table({"unused"});
    if (!gamma_grid.empty()) {
        const auto grid = pfbm::parse_grid(gamma_grid);
        const auto entries =
            pfbm::sweep_gamma(problem, pfbm::parse_family(tnorm.family), grid,
                              pfbm::BonferroniParams(p, q));
        table = pfbm::gamma_sweep_table(entries);
    } else {
        const auto pg = pfbm::parse_grid(p_grid);
        const auto qg = pfbm::parse_grid(q_grid);
        const auto entries = pfbm::sweep_pq(problem, tnorm.spec(), pg, qg);
        table = pfbm::pq_sweep_table(entries);
    }

    if (out_path.empty() || out_path == "-") {
        table.render_csv(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw pfbm::Error("cannot open output file \"" + out_path + "\"");
        table.render_csv(out);
        std::cerr << "wrote " << table.row_count() << " rows to " << out_path << "\n";
    }
    return 0;
}

int run_selfcheck() {
    const auto started = std::chrono::steady_clock::now();
    const std::vector<pfbm::GoldenCheck> checks = pfbm::run_golden_suite();
    std::size_t failures = 0;
    for (const auto& check : checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.passed) {
            std::cout << "  [" << check.detail << "]";
            ++failures;
        }
        std::cout << "\n";
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cout << checks.size() - failures << "/" << checks.size() << " checks passed in "
              << elapsed.count() << " ms\n";
    return failures == 0 ? 0 : kExitSelfcheck;
}

int run_validate(const std::string& path) {
    const pfbm::DecisionProblem problem = pfbm::load_problem(path);
    std::cout << path << ": OK (" << problem.alternative_count() << " alternatives, "
              << problem.criterion_count() << " criteria)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Picture fuzzy multi-criteria decision engine built on strict t-norm "
                 "Bonferroni aggregation"};
    app.require_subcommand(1);

    std::string problem_path;
    TNormOptions tnorm;
    double p = 1.0;
    double q = 1.0;
    std::string format = "text";
    std::string p_grid;
    std::string q_grid;
    std::string gamma_grid;
    std::string out_path;

    CLI::App* rank = app.add_subcommand("rank", "rank the alternatives of a problem file");
    rank->add_option("problem", problem_path, "problem file (.json or .csv)")->required();
    add_tnorm_options(*rank, tnorm);
    rank->add_option("--p", p, "first Bonferroni exponent")->capture_default_str();
    rank->add_option("--q", q, "second Bonferroni exponent")->capture_default_str();
    rank->add_option("--format", format, "output format: text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    CLI::App* sweep = app.add_subcommand(
        "sweep", "evaluate a parameter grid and emit long-format CSV");
    sweep->add_option("problem", problem_path, "problem file (.json or .csv)")->required();
    add_tnorm_options(*sweep, tnorm);
    sweep->add_option("--p", p, "first exponent (fixed during a gamma sweep)")
        ->capture_default_str();
    sweep->add_option("--q", q, "second exponent (fixed during a gamma sweep)")
        ->capture_default_str();
    auto* pg_opt = sweep->add_option("--p-grid", p_grid,
                                     "p grid: \"start:stop:step\" or \"v1,v2,...\"");
    auto* qg_opt = sweep->add_option("--q-grid", q_grid, "q grid (same syntax)");
    auto* gg_opt = sweep->add_option("--gamma-grid", gamma_grid, "gamma grid (same syntax)");
    sweep->add_option("--out", out_path, "output CSV path (default stdout)");
    pg_opt->needs(qg_opt);
    qg_opt->needs(pg_opt);
    gg_opt->excludes(pg_opt)->excludes(qg_opt);

    CLI::App* selfcheck =
        app.add_subcommand("selfcheck", "run the frozen regression suite");
    CLI::App* validate = app.add_subcommand("validate", "parse a problem file and report");
    validate->add_option("problem", problem_path, "problem file (.json or .csv)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (rank->parsed()) return run_rank(problem_path, tnorm, p, q, format);
        if (sweep->parsed()) {
            if (gamma_grid.empty() && (p_grid.empty() || q_grid.empty())) {
                std::cerr << "sweep: set either --gamma-grid or both --p-grid and --q-grid\n";
                return kExitUsage;
            }
            return run_sweep(problem_path, tnorm, p, q, p_grid, q_grid, gamma_grid, out_path);
        }
        if (selfcheck->parsed()) return run_selfcheck();
        if (validate->parsed()) return run_validate(problem_path);
    } catch (const pfbm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
