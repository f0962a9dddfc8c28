#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pfbm/errors.hpp"
#include "pfbm/mcdm.hpp"

namespace pfbm {

// ---------------------------------------------------------------------------
// Problem files
//
// Canonical format is a JSON document:
//   {
//     "alternatives": ["A1", ...],
//     "criteria": [{"name": "G1", "orientation": "benefit"}, "G2", ...],
//     "weights": [0.2, ...],
//     "matrix": [[[mu, eta, nu], ...], ...]
//   }
// A bare string in "criteria" means a benefit criterion. A CSV importer for
// spreadsheet exports is provided alongside; see parse_problem_csv.
// ---------------------------------------------------------------------------

namespace detail {

inline Pfn parse_cell(const nlohmann::json& cell, std::size_t row, std::size_t col) {
    const std::string where =
        "matrix[" + std::to_string(row) + "][" + std::to_string(col) + "]";
    if (!cell.is_array() || cell.size() != 3) {
        throw ParseError(where + ": expected a 3-element [mu, eta, nu] array");
    }
    for (const auto& v : cell) {
        if (!v.is_number()) throw ParseError(where + ": non-numeric component");
    }
    try {
        return Pfn(cell[0].get<double>(), cell[1].get<double>(), cell[2].get<double>());
    } catch (const InvalidPfn& e) {
        throw InvalidPfn(where + ": " + e.what());
    }
}

}  // namespace detail

inline DecisionProblem parse_problem_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
    for (const char* key : {"alternatives", "criteria", "weights", "matrix"}) {
        if (!doc.contains(key)) {
            throw ParseError(std::string("missing required key \"") + key + "\"");
        }
    }

    std::vector<std::string> alternatives;
    for (const auto& a : doc["alternatives"]) {
        if (!a.is_string()) throw ParseError("alternatives must be strings");
        alternatives.push_back(a.get<std::string>());
    }

    std::vector<Criterion> criteria;
    for (const auto& c : doc["criteria"]) {
        if (c.is_string()) {
            criteria.push_back({c.get<std::string>(), Orientation::Benefit});
        } else if (c.is_object() && c.contains("name")) {
            Criterion crit;
            crit.name = c["name"].get<std::string>();
            crit.orientation = c.contains("orientation")
                                   ? parse_orientation(c["orientation"].get<std::string>())
                                   : Orientation::Benefit;
            criteria.push_back(std::move(crit));
        } else {
            throw ParseError("criteria entries must be names or {name, orientation} objects");
        }
    }

    std::vector<double> weights;
    for (const auto& w : doc["weights"]) {
        if (!w.is_number()) throw ParseError("weights must be numeric");
        weights.push_back(w.get<double>());
    }

    const auto& m = doc["matrix"];
    if (!m.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<Pfn>> matrix;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i].is_array()) {
            throw ParseError("matrix[" + std::to_string(i) + "] is not an array");
        }
        std::vector<Pfn> row;
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            row.push_back(detail::parse_cell(m[i][j], i, j));
        }
        matrix.push_back(std::move(row));
    }

    return DecisionProblem(std::move(alternatives), std::move(criteria), std::move(matrix),
                           WeightVector(std::move(weights)));
}

inline nlohmann::json problem_to_json(const DecisionProblem& problem) {
    nlohmann::json doc;
    doc["alternatives"] = problem.alternatives();
    auto& criteria = doc["criteria"] = nlohmann::json::array();
    for (const auto& c : problem.criteria()) {
        criteria.push_back({{"name", c.name},
                            {"orientation", std::string(orientation_name(c.orientation))}});
    }
    auto& weights = doc["weights"] = nlohmann::json::array();
    for (double w : problem.weights().values()) weights.push_back(w);
    auto& matrix = doc["matrix"] = nlohmann::json::array();
    for (const auto& row : problem.matrix()) {
        auto& out_row = matrix.emplace_back(nlohmann::json::array());
        for (const Pfn& cell : row) {
            out_row.push_back({cell.mu(), cell.eta(), cell.nu()});
        }
    }
    return doc;
}

namespace detail {

inline std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            return out;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::string trim(std::string s) {
    const auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

inline double parse_number(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(where + ": cannot parse number \"" + s + "\"");
    }
}

}  // namespace detail

/// Spreadsheet import. Layout:
///   alternative,G1,G2:cost,...     header; ":cost"/":benefit" suffix optional
///   #weights,0.2,0.5,...           criterion weights
///   A1,0.53;0.33;0.09,...          one row per alternative, cells mu;eta;nu
inline DecisionProblem parse_problem_csv(std::istream& in) {
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        rows.push_back(detail::split(line, ','));
    }
    if (rows.size() < 3) {
        throw ParseError("CSV problem needs a header, a #weights row and at least one "
                         "alternative row");
    }

    std::vector<Criterion> criteria;
    for (std::size_t j = 1; j < rows[0].size(); ++j) {
        std::string name = detail::trim(rows[0][j]);
        Orientation orientation = Orientation::Benefit;
        if (const auto pos = name.rfind(':'); pos != std::string::npos) {
            orientation = parse_orientation(detail::trim(name.substr(pos + 1)));
            name = detail::trim(name.substr(0, pos));
        }
        criteria.push_back({std::move(name), orientation});
    }

    if (detail::trim(rows[1][0]) != "#weights") {
        throw ParseError("second CSV row must start with #weights");
    }
    if (rows[1].size() != criteria.size() + 1) {
        throw ParseError("#weights row has " + std::to_string(rows[1].size() - 1) +
                         " entries for " + std::to_string(criteria.size()) + " criteria");
    }
    std::vector<double> weights;
    for (std::size_t j = 1; j < rows[1].size(); ++j) {
        weights.push_back(detail::parse_number(detail::trim(rows[1][j]), "#weights"));
    }

    std::vector<std::string> alternatives;
    std::vector<std::vector<Pfn>> matrix;
    for (std::size_t r = 2; r < rows.size(); ++r) {
        if (rows[r].size() != criteria.size() + 1) {
            throw ParseError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size() - 1) + " cells for " +
                             std::to_string(criteria.size()) + " criteria");
        }
        alternatives.push_back(detail::trim(rows[r][0]));
        std::vector<Pfn> row;
        for (std::size_t j = 1; j < rows[r].size(); ++j) {
            const std::string where =
                "row " + std::to_string(r + 1) + ", column " + std::to_string(j + 1);
            const auto parts = detail::split(detail::trim(rows[r][j]), ';');
            if (parts.size() != 3) {
                throw ParseError(where + ": expected mu;eta;nu");
            }
            try {
                row.emplace_back(detail::parse_number(detail::trim(parts[0]), where),
                                 detail::parse_number(detail::trim(parts[1]), where),
                                 detail::parse_number(detail::trim(parts[2]), where));
            } catch (const InvalidPfn& e) {
                throw InvalidPfn(where + ": " + e.what());
            }
        }
        matrix.push_back(std::move(row));
    }

    return DecisionProblem(std::move(alternatives), std::move(criteria), std::move(matrix),
                           WeightVector(std::move(weights)));
}

/// Loads a problem file, dispatching on the .json / .csv extension.
inline DecisionProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        return parse_problem_csv(in);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_problem_json(doc);
}

// ---------------------------------------------------------------------------
// Report tables
// ---------------------------------------------------------------------------

/// A rectangular report: text rendering shows numbers at 4 decimal places
/// (the convention used throughout the case-study tables), CSV rendering
/// keeps the shortest representation that round-trips.
class ReportTable {
public:
    using Cell = std::variant<std::string, double>;

    explicit ReportTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns_.size()) {
            throw LengthMismatch("report row has " + std::to_string(row.size()) +
                                 " cells for " + std::to_string(columns_.size()) + " columns");
        }
        rows_.push_back(std::move(row));
    }

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t row_count() const { return rows_.size(); }

    void render_text(std::ostream& os) const {
        std::vector<std::vector<std::string>> cells;
        cells.reserve(rows_.size());
        for (const auto& row : rows_) {
            std::vector<std::string> line;
            for (const auto& cell : row) line.push_back(text_cell(cell));
            cells.push_back(std::move(line));
        }
        std::vector<std::size_t> width(columns_.size());
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            width[j] = columns_[j].size();
            for (const auto& line : cells) width[j] = std::max(width[j], line[j].size());
        }
        const auto emit = [&](const std::vector<std::string>& line) {
            for (std::size_t j = 0; j < line.size(); ++j) {
                if (j) os << "  ";
                os << line[j];
                if (j + 1 < line.size()) {
                    os << std::string(width[j] - line[j].size(), ' ');
                }
            }
            os << '\n';
        };
        emit(columns_);
        std::size_t total = 0;
        for (std::size_t j = 0; j < width.size(); ++j) total += width[j] + (j ? 2 : 0);
        os << std::string(total, '-') << '\n';
        for (const auto& line : cells) emit(line);
    }

    void render_csv(std::ostream& os) const {
        emit_csv_line(os, columns_);
        for (const auto& row : rows_) {
            std::vector<std::string> line;
            for (const auto& cell : row) line.push_back(csv_cell(cell));
            emit_csv_line(os, line);
        }
    }

    /// Shortest decimal form that parses back to the same double.
    static std::string format_full(double v) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }

    static std::string format_fixed(double v, int precision = 4) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
        return buf;
    }

private:
    static std::string text_cell(const Cell& cell) {
        if (std::holds_alternative<double>(cell)) return format_fixed(std::get<double>(cell));
        return std::get<std::string>(cell);
    }

    static std::string csv_cell(const Cell& cell) {
        if (std::holds_alternative<double>(cell)) return format_full(std::get<double>(cell));
        return std::get<std::string>(cell);
    }

    static void emit_csv_line(std::ostream& os, const std::vector<std::string>& line) {
        for (std::size_t j = 0; j < line.size(); ++j) {
            if (j) os << ',';
            const std::string& s = line[j];
            if (s.find_first_of(",\"\n") != std::string::npos) {
                os << '"';
                for (char c : s) {
                    if (c == '"') os << '"';
                    os << c;
                }
                os << '"';
            } else {
                os << s;
            }
        }
        os << '\n';
    }

    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

/// Aggregates plus scores, one row per alternative in ranking order.
inline ReportTable ranking_report(const RankingResult& result) {
    ReportTable table({"rank", "alternative", "mu", "eta", "nu", "score"});
    for (const auto& r : result.by_rank) {
        table.add_row({ReportTable::format_full(static_cast<double>(r.rank)), r.name,
                       r.aggregate.mu(), r.aggregate.eta(), r.aggregate.nu(), r.score});
    }
    return table;
}

/// Long-format (p, q) sweep: one row per grid point and alternative.
inline ReportTable pq_sweep_table(const std::vector<PqSweepEntry>& entries) {
    ReportTable table({"p", "q", "alternative", "score", "rank"});
    for (const auto& e : entries) {
        for (const auto& r : e.ranking.by_rank) {
            table.add_row({e.p, e.q, r.name, r.score,
                           ReportTable::format_full(static_cast<double>(r.rank))});
        }
    }
    return table;
}

/// Long-format gamma sweep; skipped out-of-domain points keep a single
/// annotated row so the grid stays visible in the output.
inline ReportTable gamma_sweep_table(const std::vector<GammaSweepEntry>& entries) {
    ReportTable table({"gamma", "alternative", "score", "rank", "note"});
    for (const auto& e : entries) {
        if (e.skipped) {
            table.add_row({e.gamma, std::string(), std::string(), std::string(), e.note});
            continue;
        }
        for (const auto& r : e.ranking.by_rank) {
            table.add_row({e.gamma, r.name, r.score,
                           ReportTable::format_full(static_cast<double>(r.rank)),
                           std::string()});
        }
    }
    return table;
}

/// Grid syntax accepted by the CLI: either an explicit comma list "1,2,5"
/// or an inclusive range "start:stop:step".
inline std::vector<double> parse_grid(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        const auto parts = detail::split(text, ':');
        if (parts.size() != 3) {
            throw DomainError("grid range must be start:stop:step, got \"" + text + "\"");
        }
        const double start = detail::parse_number(detail::trim(parts[0]), "grid");
        const double stop = detail::parse_number(detail::trim(parts[1]), "grid");
        const double step = detail::parse_number(detail::trim(parts[2]), "grid");
        if (!(step > 0.0)) throw DomainError("grid step must be positive");
        if (stop < start) throw DomainError("grid stop must not precede start");
        std::vector<double> out;
        for (int k = 0;; ++k) {
            const double v = start + k * step;
            if (v > stop + step * 1e-9) break;
            out.push_back(std::min(v, stop));
        }
        return out;
    }
    std::vector<double> out;
    for (const auto& part : detail::split(text, ',')) {
        const std::string item = detail::trim(part);
        if (item.empty()) continue;
        out.push_back(detail::parse_number(item, "grid"));
    }
    if (out.empty()) throw DomainError("empty parameter grid \"" + text + "\"");
    return out;
}

}  // namespace pfbm
