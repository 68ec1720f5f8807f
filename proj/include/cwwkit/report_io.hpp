#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "cwwkit/pipeline.hpp"

namespace cwwkit {

enum class ReportFormat { table, delimited, structured };

inline std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "table") return ReportFormat::table;
  if (text == "delimited" || text == "csv") return ReportFormat::delimited;
  if (text == "structured" || text == "json") return ReportFormat::structured;
  return std::nullopt;
}

namespace detail {

inline std::string cell_numeric(const ReportCell& cell, bool full_precision) {
  return cell.ok() ? cell.recommendation->numeric_text(full_precision) : "-";
}

inline std::string cell_word(const ReportCell& cell) {
  return cell.ok() ? cell.recommendation->linguistic.code : "FAILED";
}

// Quotes a delimited field when it holds a comma or quote.
inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

inline std::string method_title(Method m) {
  switch (m) {
    case Method::extension_principle: return "Extension principle";
    case Method::symbolic: return "Symbolic method";
    case Method::two_tuple: return "2-tuple";
    case Method::perceptual: return "Perceptual computing";
  }
  return "?";
}

}  // namespace detail

/// Aligned plain-text table: student, the four words, then numeric/word per method.
/// Failed cells are listed under the table.
inline void write_table(std::ostream& out, const EvaluationReport& report,
                        bool full_precision = false) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"Student"};
  for (const auto& k : report.parameter_keys) header.push_back(k);
  for (auto m : report.methods) {
    header.push_back(detail::method_title(m));
    header.push_back("");
  }
  grid.push_back(header);
  for (const auto& row : report.rows) {
    std::vector<std::string> line{row.student_id};
    line.insert(line.end(), row.words.begin(), row.words.end());
    for (const auto& cell : row.cells) {
      line.push_back(detail::cell_numeric(cell, full_precision));
      line.push_back(detail::cell_word(cell));
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += fmt::format("{:<{}}", line[c], width[c]);
      if (c + 1 < line.size()) text += "  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      if (!row.cells[c].ok()) {
        out << fmt::format("! student {} {}: {}\n", row.student_id, to_string(report.methods[c]),
                           row.cells[c].failure);
      }
    }
  }
  if (full_precision) {
    if (const auto col = report.method_column(Method::perceptual)) {
      out << "\nperceptual centroids (full precision)\n";
      for (const auto& row : report.rows) {
        const auto& cell = row.cells[*col];
        if (!cell.ok()) continue;
        const auto& p = std::get<PerceptualResult>(cell.recommendation->numeric);
        out << fmt::format("{}  c_l={:.6f}  c_r={:.6f}  mean={:.6f}\n", row.student_id,
                           p.centroid.c_l, p.centroid.c_r, p.mean);
      }
    }
  }
}

/// Comma-delimited: student_id, parameter keys, then <method>_numeric,<method>_linguistic
/// pairs and a trailing status column. Fields holding commas are double-quoted.
inline void write_delimited(std::ostream& out, const EvaluationReport& report,
                            bool full_precision = false) {
  out << kStudentIdColumn;
  for (const auto& k : report.parameter_keys) out << ',' << k;
  for (auto m : report.methods) out << ',' << to_string(m) << "_numeric," << to_string(m) << "_linguistic";
  out << ",status\n";
  for (const auto& row : report.rows) {
    out << row.student_id;
    for (const auto& w : row.words) out << ',' << w;
    std::string status = "ok";
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const auto& cell = row.cells[c];
      out << ','
          << detail::csv_field(cell.ok() ? cell.recommendation->numeric_text(full_precision) : "")
          << ',' << (cell.ok() ? cell.recommendation->linguistic.code : "");
      if (!cell.ok() && status == "ok") status = "failed: " + cell.failure;
    }
    out << ',' << detail::csv_field(status) << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Recommendation& rec, bool full_precision) {
  nlohmann::ordered_json j;
  j["numeric"] = rec.numeric_text(full_precision);
  j["linguistic"] = rec.linguistic.code;
  j["label"] = rec.linguistic.label;
  std::visit(
      [&j](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ExtensionResult>) {
          j["aggregate"] = {r.aggregate.l, r.aggregate.m, r.aggregate.r};
          j["matched"] = {r.matched.l, r.matched.m, r.matched.r};
          j["distance"] = r.distance;
        } else if constexpr (std::is_same_v<T, SymbolicResult>) {
          j["index"] = r.index;
        } else if constexpr (std::is_same_v<T, TwoTupleResult>) {
          j["beta"] = r.beta;
          j["term_index"] = r.tuple.term_index;
          j["alpha"] = r.tuple.alpha;
        } else {
          j["centroid"] = {r.centroid.c_l, r.centroid.c_r};
          j["mean"] = r.mean;
          j["similarities"] = r.similarities;
        }
      },
      rec.numeric);
  return j;
}

inline nlohmann::ordered_json to_json(const EvaluationReport& report, bool full_precision = false) {
  nlohmann::ordered_json meta;
  meta["codebook"] = report.codebook_id;
  meta["grid"] = {{"min", report.options.grid.domain_min()},
                  {"max", report.options.grid.domain_max()},
                  {"samples", report.options.grid.size()}};
  meta["lwa_mode"] = to_string(report.options.lwa_mode);
  meta["alpha_levels"] = report.options.alpha_levels;
  meta["distance_weights"] = {report.options.distance_weights.p1,
                              report.options.distance_weights.p2,
                              report.options.distance_weights.p3};
  meta["methods"] = nlohmann::ordered_json::array();
  for (auto m : report.methods) meta["methods"].push_back(to_string(m));

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["student_id"] = row.student_id;
    nlohmann::ordered_json fb;
    for (std::size_t p = 0; p < row.words.size(); ++p) fb[report.parameter_keys[p]] = row.words[p];
    r["feedback"] = fb;
    nlohmann::ordered_json results;
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const auto& cell = row.cells[c];
      results[std::string(to_string(report.methods[c]))] =
          cell.ok() ? to_json(*cell.recommendation, full_precision)
                    : nlohmann::ordered_json{{"error", cell.failure}};
    }
    r["results"] = results;
    rows.push_back(std::move(r));
  }
  return {{"metadata", meta}, {"rows", rows}};
}

inline nlohmann::ordered_json to_json(const UniquenessSummary& summary) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["full_precision"] = summary.full_precision;
  for (const auto& mu : summary.methods) {
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& g : mu.groups) {
      groups.push_back({{"numeric", g.numeric},
                        {"linguistic", g.linguistic},
                        {"students", g.student_ids},
                        {"distinct_feedback", g.distinct_feedback}});
    }
    j["methods"][std::string(to_string(mu.method))] = {
        {"students", mu.students},
        {"duplicate_groups", mu.groups.size()},
        {"duplicated_students", mu.duplicated_students()},
        {"groups", groups}};
  }
  return j;
}

inline void write_uniqueness(std::ostream& out, const UniquenessSummary& summary) {
  out << "# uniqueness (identical recommendation for different feedback)"
      << (summary.full_precision ? ", full precision" : "") << '\n';
  for (const auto& mu : summary.methods) {
    out << fmt::format("{}: {} duplicate group(s), {} of {} students share a recommendation\n",
                       to_string(mu.method), mu.groups.size(), mu.duplicated_students(),
                       mu.students);
    for (const auto& g : mu.groups) {
      out << fmt::format("  {} {} ({} students, {} distinct feedback): {}\n", g.numeric,
                         g.linguistic, g.student_ids.size(), g.distinct_feedback,
                         fmt::join(g.student_ids, " "));
    }
  }
}

}  // namespace cwwkit
