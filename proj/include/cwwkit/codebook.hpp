#pragma once

// IT2 word codebook: one FOU per (parameter, word) of a schema, read from
// delimited text with columns
//   parameter,label,code,a,b,c,d,e,f,g,i,h[,c_l,c_r,mean]
// An optional comment line `# domain: <min> <max>` declares the scale;
// other lines starting with '#' are ignored.

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "cwwkit/default_codebook.hpp"
#include "cwwkit/detail/text.hpp"
#include "cwwkit/error.hpp"
#include "cwwkit/it2/centroid.hpp"
#include "cwwkit/it2/fou.hpp"
#include "cwwkit/vocabulary.hpp"

namespace cwwkit {

struct StoredCentroid {
  double c_l = 0.0;
  double c_r = 0.0;
  std::optional<double> mean;

  friend bool operator==(const StoredCentroid&, const StoredCentroid&) = default;
};

struct CodebookEntry {
  std::string parameter_name;
  LinguisticTerm word;
  it2::TrapezoidIT2 fou;
  std::optional<StoredCentroid> stored_centroid;

  friend bool operator==(const CodebookEntry&, const CodebookEntry&) = default;
};

class Codebook {
 public:
  static constexpr double kStandardMin = 0.0;
  static constexpr double kStandardMax = 10.0;
  /// Allowed gap between a stored mean and (c_l + c_r) / 2.
  static constexpr double kStoredMeanTolerance = 0.01;

  using Key = std::pair<std::size_t, std::size_t>;  // (schema position, term index)

  Codebook(ParameterSchema schema, std::map<Key, CodebookEntry> entries, double domain_min,
           double domain_max)
      : schema_(std::move(schema)),
        entries_(std::move(entries)),
        domain_min_(domain_min),
        domain_max_(domain_max) {}

  const ParameterSchema& schema() const noexcept { return schema_; }
  const std::map<Key, CodebookEntry>& entries() const noexcept { return entries_; }
  double domain_min() const noexcept { return domain_min_; }
  double domain_max() const noexcept { return domain_max_; }
  bool nonstandard_domain() const noexcept {
    return domain_min_ != kStandardMin || domain_max_ != kStandardMax;
  }

  /// Entry for a canonical parameter name (or the recommendation set name) and a label or code.
  const CodebookEntry& entry(std::string_view parameter, std::string_view word) const {
    const auto position = schema_.position_of(parameter);
    if (!position) throw LookupError("no parameter '" + std::string(parameter) + "' in codebook");
    const auto* term = schema_.set_at(*position).find(word);
    if (term == nullptr) {
      throw LookupError("no word '" + std::string(word) + "' for '" + std::string(parameter) +
                        "' in codebook");
    }
    return entries_.at({*position, term->index});
  }

  const it2::TrapezoidIT2& fou(std::size_t position, std::size_t index) const {
    const auto it = entries_.find({position, index});
    if (it == entries_.end()) throw LookupError("codebook has no entry for that term");
    return it->second.fou;
  }

  /// FOUs of the recommendation words in index order.
  std::vector<it2::TrapezoidIT2> recommendation_fous() const {
    std::vector<it2::TrapezoidIT2> out;
    for (std::size_t i = 0; i < schema_.recommendation.size(); ++i) {
      out.push_back(fou(schema_.parameters.size(), i));
    }
    return out;
  }

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  ParameterSchema schema_;
  std::map<Key, CodebookEntry> entries_;
  double domain_min_;
  double domain_max_;
};

inline it2::TrapezoidIT2 lookup(const Codebook& cb, std::string_view parameter,
                                std::string_view word) {
  return cb.entry(parameter, word).fou;
}

namespace detail {

inline const std::vector<std::string>& codebook_columns() {
  static const std::vector<std::string> cols{"parameter", "label", "code", "a", "b", "c",
                                             "d",         "e",     "f",    "g", "i", "h",
                                             "c_l",       "c_r",   "mean"};
  return cols;
}

inline constexpr std::size_t kRequiredCodebookColumns = 12;

inline std::string describe(const LinguisticTerm& t) { return t.label + " (" + t.code + ")"; }

}  // namespace detail

/// Parses and validates a codebook against `schema`. Errors: ParseError (row
/// number), ValidationError (word + constraint), CompletenessError (missing
/// or orphan words).
inline Codebook load_codebook(std::istream& in, const ParameterSchema& schema) {
  double domain_min = Codebook::kStandardMin;
  double domain_max = Codebook::kStandardMax;
  std::map<Codebook::Key, CodebookEntry> entries;
  std::optional<std::size_t> column_count;
  std::string line;
  std::size_t row = 0;

  while (detail::read_line(in, line)) {
    ++row;
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      auto body = detail::trim(text.substr(1));
      if (body.starts_with("domain:")) {
        std::istringstream bounds{std::string(body.substr(7))};
        double lo = 0.0;
        double hi = 0.0;
        if (!(bounds >> lo >> hi) || !(hi > lo)) {
          throw ParseError(row, "domain directive needs '<min> <max>' with max > min");
        }
        domain_min = lo;
        domain_max = hi;
      }
      continue;
    }
    auto cells = detail::split_cells(text);
    if (!column_count) {
      const auto& expected = detail::codebook_columns();
      const bool full = cells == expected;
      const bool required_only =
          cells == std::vector<std::string>(expected.begin(),
                                            expected.begin() + detail::kRequiredCodebookColumns);
      if (!full && !required_only) {
        throw ParseError(row, "header must be 'parameter,label,code,a,b,c,d,e,f,g,i,h' "
                              "optionally followed by ',c_l,c_r,mean'");
      }
      column_count = cells.size();
      continue;
    }
    if (cells.size() != *column_count) {
      throw ParseError(row, fmt::format("expected {} cells, got {}", *column_count, cells.size()));
    }

    const auto position = schema.position_of(cells[0]);
    if (!position) throw CompletenessError("orphan entry: unknown parameter '" + cells[0] + "'");
    const TermSet& set = schema.set_at(*position);
    const auto* term = set.find(cells[2]);
    if (term == nullptr || !term->matches(cells[1])) {
      throw CompletenessError("orphan entry: word '" + cells[1] + " (" + cells[2] +
                              ")' is not in '" + set.name() + "'");
    }

    std::array<double, 9> p{};
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto v = detail::parse_double(cells[3 + k]);
      if (!v) {
        throw ParseError(row, fmt::format("column '{}' is not a number: '{}'",
                                          detail::codebook_columns()[3 + k], cells[3 + k]));
      }
      p[k] = *v;
    }
    std::array<std::optional<double>, 3> stored{};
    for (std::size_t k = 12; k < cells.size(); ++k) {
      if (cells[k].empty()) continue;
      const auto v = detail::parse_double(cells[k]);
      if (!v) {
        throw ParseError(row, fmt::format("column '{}' is not a number: '{}'",
                                          detail::codebook_columns()[k], cells[k]));
      }
      stored[k - 12] = *v;
    }

    const auto who = "word '" + detail::describe(*term) + "' of '" + set.name() + "'";
    std::optional<it2::TrapezoidIT2> fou;
    try {
      fou = it2::TrapezoidIT2::create({p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]});
    } catch (const ValidationError& e) {
      throw ValidationError(who + ": " + e.what());
    }
    if (fou->support_min() < domain_min || fou->support_max() > domain_max) {
      throw ValidationError(who + ": UMF support lies outside the codebook domain");
    }

    std::optional<StoredCentroid> centroid;
    if (stored[0] || stored[1] || stored[2]) {
      if (!stored[0] || !stored[1]) {
        throw ValidationError(who + ": stored centroid needs both c_l and c_r");
      }
      centroid = StoredCentroid{*stored[0], *stored[1], stored[2]};
      if (centroid->c_l > centroid->c_r) throw ValidationError(who + ": stored c_l exceeds c_r");
      if (centroid->mean && std::abs(*centroid->mean - 0.5 * (centroid->c_l + centroid->c_r)) >
                                Codebook::kStoredMeanTolerance + 1e-12) {
        throw ValidationError(who + ": stored mean differs from (c_l + c_r) / 2 by more than 0.01");
      }
    }

    const Codebook::Key key{*position, term->index};
    if (entries.contains(key)) throw ValidationError(who + ": duplicate entry");
    entries.emplace(key, CodebookEntry{set.name(), *term, *fou, centroid});
  }
  if (!column_count) throw ParseError(row, "missing header row");

  std::vector<std::string> missing;
  for (std::size_t pos = 0; pos <= schema.parameters.size(); ++pos) {
    const auto& set = schema.set_at(pos);
    for (const auto& t : set.terms()) {
      if (!entries.contains({pos, t.index})) {
        missing.push_back("'" + detail::describe(t) + "' of '" + set.name() + "'");
      }
    }
  }
  if (!missing.empty()) {
    std::string msg = "codebook is missing";
    for (std::size_t k = 0; k < missing.size(); ++k) msg += (k ? ", " : " ") + missing[k];
    throw CompletenessError(msg);
  }
  return Codebook(schema, std::move(entries), domain_min, domain_max);
}

inline Codebook load_codebook_file(const std::string& path, const ParameterSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open codebook file '" + path + "'");
  return load_codebook(in, schema);
}

inline Codebook default_codebook(const ParameterSchema& schema = build_default_schema()) {
  std::istringstream in(kDefaultCodebookCsv);
  return load_codebook(in, schema);
}

/// Writes the codebook in schema order; reading the output back yields an equal Codebook.
inline void write_codebook(std::ostream& out, const Codebook& cb) {
  if (cb.nonstandard_domain()) {
    out << "# domain: " << detail::shortest(cb.domain_min()) << ' '
        << detail::shortest(cb.domain_max()) << '\n';
  }
  const auto& cols = detail::codebook_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << '\n';
  for (const auto& [key, e] : cb.entries()) {
    out << e.parameter_name << ',' << e.word.label << ',' << e.word.code;
    for (double v : e.fou.as_array()) out << ',' << detail::shortest(v);
    if (e.stored_centroid) {
      out << ',' << detail::shortest(e.stored_centroid->c_l) << ','
          << detail::shortest(e.stored_centroid->c_r) << ',';
      if (e.stored_centroid->mean) out << detail::shortest(*e.stored_centroid->mean);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

struct CentroidCheck {
  std::string parameter_name;
  LinguisticTerm word;
  it2::CentroidInterval computed;
  std::optional<StoredCentroid> stored;
  double delta_l = 0.0;  // computed - stored
  double delta_r = 0.0;
  bool passed = true;
};

struct VerificationReport {
  double tolerance = 0.0;
  std::size_t grid_samples = 0;
  std::vector<CentroidCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
};

/// Recomputes every entry's centroid. Entries without a stored centroid pass trivially.
inline VerificationReport verify_stored_centroids(const Codebook& cb,
                                                  const it2::DiscretizationGrid& grid,
                                                  double tolerance) {
  VerificationReport report{tolerance, grid.size(), {}};
  for (const auto& [key, e] : cb.entries()) {
    CentroidCheck check{e.parameter_name, e.word, it2::centroid(e.fou, grid), e.stored_centroid};
    if (e.stored_centroid) {
      check.delta_l = check.computed.c_l - e.stored_centroid->c_l;
      check.delta_r = check.computed.c_r - e.stored_centroid->c_r;
      check.passed = std::abs(check.delta_l) <= tolerance && std::abs(check.delta_r) <= tolerance;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

/// One line per word, then a summary line.
inline void write_verification(std::ostream& out, const VerificationReport& report) {
  out << fmt::format("# centroid verification: tolerance {} grid {}\n",
                     detail::shortest(report.tolerance), report.grid_samples);
  out << "parameter,code,computed_c_l,computed_c_r,stored_c_l,stored_c_r,delta_l,delta_r,status\n";
  for (const auto& c : report.checks) {
    if (c.stored) {
      out << fmt::format("{},{},{:.4f},{:.4f},{},{},{:+.4f},{:+.4f},{}\n", c.parameter_name,
                         c.word.code, c.computed.c_l, c.computed.c_r,
                         detail::shortest(c.stored->c_l), detail::shortest(c.stored->c_r),
                         c.delta_l, c.delta_r, c.passed ? "PASS" : "FAIL");
    } else {
      out << fmt::format("{},{},{:.4f},{:.4f},,,,,NO-STORED-CENTROID\n", c.parameter_name,
                         c.word.code, c.computed.c_l, c.computed.c_r);
    }
  }
  out << fmt::format("# {} of {} entries within tolerance\n",
                     report.checks.size() - report.failures(), report.checks.size());
}

}  // namespace cwwkit
