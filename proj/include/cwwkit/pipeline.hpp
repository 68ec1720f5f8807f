#pragma once

// Per-student evaluation with the four CWW methods, batch reports, ranking
// and duplicate-recommendation analysis.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "cwwkit/codebook.hpp"
#include "cwwkit/error.hpp"
#include "cwwkit/feedback_io.hpp"
#include "cwwkit/it2/centroid.hpp"
#include "cwwkit/it2/jaccard.hpp"
#include "cwwkit/it2/lwa.hpp"
#include "cwwkit/symbolic.hpp"
#include "cwwkit/t1_extension.hpp"
#include "cwwkit/two_tuple.hpp"
#include "cwwkit/vocabulary.hpp"

namespace cwwkit {

enum class LwaMode {
  exact,  // alpha-cut average, LMF height = min input height
  parameterwise,  // parameter-wise average of all nine trapezoid parameters
};

inline std::string_view to_string(LwaMode m) { return m == LwaMode::exact ? "exact" : "parameterwise"; }

struct EvaluationOptions {
  t1::DistanceWeights distance_weights{};
  /// Symbolic-method weights; equal weights when empty.
  std::vector<double> symbolic_weights;
  /// LWA weights for the perceptual computer; equal weights when empty.
  std::vector<double> lwa_weights;
  it2::DiscretizationGrid grid{};
  LwaMode lwa_mode = LwaMode::exact;
  std::size_t alpha_levels = 21;
};

struct ExtensionResult {
  t1::TriTuple aggregate;  // raw collective vector C
  t1::TriTuple matched;    // tri-tuple of the recommended term
  double distance = 0.0;
};

struct SymbolicResult {
  std::size_t index = 0;
};

struct TwoTupleResult {
  double beta = 0.0;
  two_tuple::TwoTuple tuple;
};

struct PerceptualResult {
  it2::CentroidInterval centroid;
  double mean = 0.0;
  double reported_mean = 0.0;  // rounded to 2 decimals
  std::vector<double> similarities;  // Jaccard against each recommendation word
};

using NumericPayload = std::variant<ExtensionResult, SymbolicResult, TwoTupleResult, PerceptualResult>;

/// Decimals shown for the perceptual score in ordinary output.
inline constexpr int kPerceptualDecimals = 2;

struct Recommendation {
  Method method;
  NumericPayload numeric;
  LinguisticTerm linguistic;

  /// Total order used for ranking.
  double score() const {
    return std::visit(
        [](const auto& r) -> double {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, ExtensionResult>) return r.matched.m;
          if constexpr (std::is_same_v<T, SymbolicResult>) return static_cast<double>(r.index);
          if constexpr (std::is_same_v<T, TwoTupleResult>) return r.beta;
          if constexpr (std::is_same_v<T, PerceptualResult>) return r.mean;
        },
        numeric);
  }

  /// Numeric cell as printed in reports; `full_precision` shows the unrounded perceptual score.
  std::string numeric_text(bool full_precision = false) const {
    return std::visit(
        [full_precision](const auto& r) -> std::string {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, ExtensionResult>) {
            return fmt::format("{{{:.6g},{:.6g},{:.6g}}}", r.matched.l, r.matched.m, r.matched.r);
          }
          if constexpr (std::is_same_v<T, SymbolicResult>) return std::to_string(r.index);
          if constexpr (std::is_same_v<T, TwoTupleResult>) return fmt::format("{:.6g}", r.beta);
          if constexpr (std::is_same_v<T, PerceptualResult>) {
            return full_precision ? fmt::format("{:.6f}", r.mean)
                                  : fmt::format("{:.{}f}", r.mean, kPerceptualDecimals);
          }
        },
        numeric);
  }
};

inline double round_to_decimals(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

/// Holds the per-run precomputation (partitions, sampled recommendation words)
/// so a batch shares it. Immutable after construction.
class Evaluator {
 public:
  Evaluator(const ParameterSchema& schema, const Codebook* codebook, EvaluationOptions options)
      : schema_(schema), codebook_(codebook), options_(std::move(options)) {
    if (schema_.parameters.empty()) throw ConfigError("schema has no parameters");
    for (const auto& p : schema_.parameters) {
      partitions_.push_back(t1::uniform_triangular_partition(p.size()));
    }
    recommendation_partition_ = t1::uniform_triangular_partition(schema_.recommendation.size());
    const auto n = schema_.parameters.size();
    if (!options_.symbolic_weights.empty() && options_.symbolic_weights.size() != n) {
      throw ConfigError("symbolic weights must have one entry per parameter");
    }
    if (!options_.lwa_weights.empty() && options_.lwa_weights.size() != n) {
      throw ConfigError("LWA weights must have one entry per parameter");
    }
    if (codebook_ != nullptr) {
      if (!(codebook_->schema() == schema_)) {
        throw ConfigError("codebook was loaded against a different schema");
      }
      for (const auto& fou : codebook_->recommendation_fous()) {
        if (fou.support_min() < options_.grid.domain_min() ||
            fou.support_max() > options_.grid.domain_max()) {
          throw ConfigError("recommendation word lies outside the grid domain");
        }
        sampled_recommendations_.push_back(it2::sample(fou, options_.grid));
      }
    }
  }

  const ParameterSchema& schema() const noexcept { return schema_; }
  const EvaluationOptions& options() const noexcept { return options_; }
  const Codebook* codebook() const noexcept { return codebook_; }

  Recommendation evaluate(const FeedbackRecord& fb, Method method) const {
    if (fb.choices.size() != schema_.parameters.size()) {
      throw SchemaError("feedback has " + std::to_string(fb.choices.size()) +
                        " choices for " + std::to_string(schema_.parameters.size()) +
                        " parameters");
    }
    for (std::size_t p = 0; p < fb.choices.size(); ++p) {
      if (fb.choices[p].index >= schema_.parameters[p].size()) {
        throw SchemaError("choice index out of range for '" + schema_.parameters[p].name() + "'");
      }
    }
    switch (method) {
      case Method::extension_principle: return extension(fb);
      case Method::symbolic: return symbolic_method(fb);
      case Method::two_tuple: return two_tuple_method(fb);
      case Method::perceptual: return perceptual(fb);
    }
    throw DomainError("unknown method");
  }

 private:
  const TermSet& recommendation() const { return schema_.recommendation; }

  void require_common_granularity() const {
    for (const auto& p : schema_.parameters) {
      if (p.g() != recommendation().g()) {
        throw ConfigError("index-based methods need every term set to share the same g");
      }
    }
  }

  Recommendation extension(const FeedbackRecord& fb) const {
    std::vector<t1::TriTuple> tuples;
    for (std::size_t p = 0; p < fb.choices.size(); ++p) {
      tuples.push_back(partitions_[p][fb.choices[p].index]);
    }
    const auto c = t1::aggregate_tri_tuples(tuples);
    const auto best =
        t1::linguistic_approximation(c, recommendation_partition_, options_.distance_weights);
    return {Method::extension_principle,
            ExtensionResult{c, recommendation_partition_[best.index], best.distance},
            recommendation().at(best.index)};
  }

  Recommendation symbolic_method(const FeedbackRecord& fb) const {
    require_common_granularity();
    const auto sorted = symbolic::sort_terms_descending(fb.indices());
    const auto weights = options_.symbolic_weights.empty()
                             ? symbolic::WeightVector::equal(sorted.size())
                             : symbolic::WeightVector::create(options_.symbolic_weights);
    const auto index = symbolic::sm_aggregate(sorted, weights, recommendation().g());
    return {Method::symbolic, SymbolicResult{index}, recommendation().at(index)};
  }

  Recommendation two_tuple_method(const FeedbackRecord& fb) const {
    require_common_granularity();
    const auto indices = fb.indices();
    const double beta = two_tuple::aggregate_beta(indices);
    const auto tuple = two_tuple::to_two_tuple(beta, recommendation().g());
    return {Method::two_tuple, TwoTupleResult{beta, tuple}, recommendation().at(tuple.term_index)};
  }

  Recommendation perceptual(const FeedbackRecord& fb) const {
    if (codebook_ == nullptr) throw ConfigError("perceptual computing needs a codebook");
    std::vector<it2::TrapezoidIT2> words;
    for (std::size_t p = 0; p < fb.choices.size(); ++p) {
      const auto& fou = codebook_->fou(p, fb.choices[p].index);
      if (fou.support_min() < options_.grid.domain_min() ||
          fou.support_max() > options_.grid.domain_max()) {
        throw ConfigError("codebook word lies outside the grid domain");
      }
      words.push_back(fou);
    }
    const std::vector<double> weights =
        options_.lwa_weights.empty() ? std::vector<double>(words.size(), 1.0) : options_.lwa_weights;
    const auto aggregate = options_.lwa_mode == LwaMode::exact
                               ? it2::sample(it2::lwa_exact(words, weights, options_.alpha_levels),
                                             options_.grid)
                               : it2::sample(it2::lwa_parameterwise(words, weights), options_.grid);

    PerceptualResult result;
    result.centroid = it2::centroid(aggregate);
    result.mean = it2::centroid_mean(result.centroid);
    result.reported_mean = round_to_decimals(result.mean, kPerceptualDecimals);
    std::size_t best = 0;
    for (std::size_t k = 0; k < sampled_recommendations_.size(); ++k) {
      result.similarities.push_back(
          it2::jaccard_similarity(aggregate, sampled_recommendations_[k]));
      if (result.similarities[k] > result.similarities[best] + kSimilarityTieTolerance) best = k;
    }
    return {Method::perceptual, std::move(result), recommendation().at(best)};
  }

  static constexpr double kSimilarityTieTolerance = 1e-12;

  ParameterSchema schema_;
  const Codebook* codebook_;
  EvaluationOptions options_;
  std::vector<std::vector<t1::TriTuple>> partitions_;
  std::vector<t1::TriTuple> recommendation_partition_;
  std::vector<it2::SampledFou> sampled_recommendations_;
};

inline Recommendation evaluate_student(const FeedbackRecord& fb, Method method,
                                       const Codebook* cb, const ParameterSchema& schema,
                                       const EvaluationOptions& options = {}) {
  return Evaluator(schema, cb, options).evaluate(fb, method);
}

struct ReportCell {
  std::optional<Recommendation> recommendation;
  std::string failure;  // set when recommendation is empty

  bool ok() const noexcept { return recommendation.has_value(); }
};

struct ReportRow {
  std::string student_id;
  std::vector<std::string> words;        // as supplied, schema order
  std::optional<FeedbackRecord> feedback;  // empty when resolution failed
  std::string failure;                   // resolution failure
  std::vector<ReportCell> cells;         // aligned with EvaluationReport::methods
};

struct EvaluationReport {
  std::vector<std::string> parameter_names;
  std::vector<std::string> parameter_keys;
  std::vector<Method> methods;
  std::vector<ReportRow> rows;
  std::string codebook_id;
  EvaluationOptions options;

  std::optional<std::size_t> method_column(Method m) const {
    const auto it = std::find(methods.begin(), methods.end(), m);
    if (it == methods.end()) return std::nullopt;
    return static_cast<std::size_t>(it - methods.begin());
  }
};

namespace detail {

inline EvaluationReport empty_report(const ParameterSchema& schema,
                                     std::span<const Method> methods, std::string codebook_id,
                                     const EvaluationOptions& options) {
  if (methods.empty()) throw ConfigError("no methods selected");
  EvaluationReport report;
  for (const auto& p : schema.parameters) {
    report.parameter_names.push_back(p.name());
    report.parameter_keys.push_back(p.key());
  }
  report.methods.assign(methods.begin(), methods.end());
  report.codebook_id = std::move(codebook_id);
  report.options = options;
  return report;
}

inline void fill_cells(const Evaluator& evaluator, ReportRow& row, std::span<const Method> methods) {
  for (auto m : methods) {
    ReportCell cell;
    if (row.feedback) {
      try {
        cell.recommendation = evaluator.evaluate(*row.feedback, m);
      } catch (const Error& e) {
        cell.failure = e.what();
      }
    } else {
      cell.failure = row.failure;
    }
    row.cells.push_back(std::move(cell));
  }
}

}  // namespace detail

/// Evaluates resolved records. Per-cell failures are recorded, not thrown.
inline EvaluationReport evaluate_batch(std::span<const FeedbackRecord> records,
                                       std::span<const Method> methods, const Codebook* cb,
                                       const ParameterSchema& schema,
                                       const EvaluationOptions& options = {},
                                       std::string codebook_id = {}) {
  if (records.empty()) throw DomainError("cannot evaluate an empty batch");
  auto report = detail::empty_report(schema, methods, std::move(codebook_id), options);
  const Evaluator evaluator(schema, cb, options);
  for (const auto& fb : records) {
    ReportRow row{fb.student_id, fb.words, fb, {}, {}};
    detail::fill_cells(evaluator, row, methods);
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Resolves and evaluates a batch file; rows with unknown words are kept and flagged.
inline EvaluationReport evaluate_batch(const FeedbackTable& table, std::span<const Method> methods,
                                       const Codebook* cb, const ParameterSchema& schema,
                                       const EvaluationOptions& options = {},
                                       std::string codebook_id = {}) {
  if (table.rows.empty()) throw DomainError("cannot evaluate an empty batch");
  auto report = detail::empty_report(schema, methods, std::move(codebook_id), options);
  const Evaluator evaluator(schema, cb, options);
  for (const auto& raw_row : table.rows) {
    ReportRow row;
    row.student_id = raw_row.student_id;
    const auto raw = table.raw_map(schema, raw_row);
    for (const auto& p : schema.parameters) row.words.push_back(raw.at(p.name()));
    try {
      row.feedback = resolve_feedback(schema, raw_row.student_id, raw);
    } catch (const Error& e) {
      row.failure = e.what();
    }
    detail::fill_cells(evaluator, row, methods);
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Orders ids numerically when both are integers, otherwise lexicographically.
inline bool student_id_less(const std::string& a, const std::string& b) {
  long long x = 0;
  long long y = 0;
  const auto ra = std::from_chars(a.data(), a.data() + a.size(), x);
  const auto rb = std::from_chars(b.data(), b.data() + b.size(), y);
  const bool ia = ra.ec == std::errc{} && ra.ptr == a.data() + a.size();
  const bool ib = rb.ec == std::errc{} && rb.ptr == b.data() + b.size();
  if (ia && ib && x != y) return x < y;
  if (ia != ib) return ia;
  return a < b;
}

struct RankedStudent {
  std::string student_id;
  double score = 0.0;
};

/// Descending score; equal scores by ascending student id. Failed cells are left out.
inline std::vector<RankedStudent> rank_students(const EvaluationReport& report, Method method) {
  const auto column = report.method_column(method);
  if (!column) {
    throw DomainError("report has no '" + std::string(to_string(method)) + "' results");
  }
  std::vector<RankedStudent> ranking;
  for (const auto& row : report.rows) {
    const auto& cell = row.cells[*column];
    if (cell.ok()) ranking.push_back({row.student_id, cell.recommendation->score()});
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedStudent& a, const RankedStudent& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return student_id_less(a.student_id, b.student_id);
                   });
  return ranking;
}

struct DuplicateGroup {
  std::string numeric;   // reported numeric cell
  std::string linguistic;  // recommendation code
  std::vector<std::string> student_ids;
  std::size_t distinct_feedback = 0;  // number of different feedback vectors in the group
};

struct MethodUniqueness {
  Method method;
  std::size_t students = 0;  // students with a result for this method
  std::vector<DuplicateGroup> groups;

  std::size_t duplicated_students() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.student_ids.size();
    return n;
  }
};

struct UniquenessSummary {
  bool full_precision = false;
  std::vector<MethodUniqueness> methods;

  const MethodUniqueness* find(Method m) const {
    for (const auto& u : methods) {
      if (u.method == m) return &u;
    }
    return nullptr;
  }
};

/// Groups students whose (reported numeric, word) cell is identical. A group
/// is reported when it holds at least two different feedback vectors.
inline UniquenessSummary uniqueness_report(const EvaluationReport& report,
                                           bool full_precision = false) {
  UniquenessSummary summary{full_precision, {}};
  for (std::size_t col = 0; col < report.methods.size(); ++col) {
    MethodUniqueness mu{report.methods[col], 0, {}};
    std::map<std::pair<std::string, std::string>, std::vector<const ReportRow*>> buckets;
    std::vector<std::pair<std::string, std::string>> order;
    for (const auto& row : report.rows) {
      const auto& cell = row.cells[col];
      if (!cell.ok() || !row.feedback) continue;
      ++mu.students;
      std::pair key{cell.recommendation->numeric_text(full_precision),
                    cell.recommendation->linguistic.code};
      auto [it, inserted] = buckets.try_emplace(key);
      if (inserted) order.push_back(key);
      it->second.push_back(&row);
    }
    for (const auto& key : order) {
      const auto& members = buckets.at(key);
      std::vector<std::vector<std::size_t>> distinct;
      for (const auto* r : members) {
        const auto v = r->feedback->indices();
        if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
      }
      if (distinct.size() < 2) continue;
      DuplicateGroup group{key.first, key.second, {}, distinct.size()};
      for (const auto* r : members) group.student_ids.push_back(r->student_id);
      mu.groups.push_back(std::move(group));
    }
    summary.methods.push_back(std::move(mu));
  }
  return summary;
}

}  // namespace cwwkit
