#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwwkit/detail/text.hpp"
#include "cwwkit/error.hpp"

namespace cwwkit {

struct LinguisticTerm {
  std::string label;  // "Small"
  std::string code;   // "S"
  std::size_t index = 0;

  /// Case-insensitive match on either the full label or the short code.
  bool matches(std::string_view word) const {
    word = detail::trim(word);
    return detail::iequals(word, label) || detail::iequals(word, code);
  }

  friend bool operator==(const LinguisticTerm&, const LinguisticTerm&) = default;
};

/// Ordered vocabulary s_0..s_g of one parameter (or of the recommendation).
class TermSet {
 public:
  /// Builds a term set from (label, code) pairs in index order. `key` is the
  /// machine column name used by batch files. Requires at least two terms and
  /// no label/code collision (case-insensitive) inside the set.
  static TermSet create(std::string name, std::string key,
                        const std::vector<std::pair<std::string, std::string>>& words) {
    if (words.size() < 2) {
      throw ValidationError("term set '" + name + "' needs at least two terms (g >= 1)");
    }
    TermSet set;
    set.name_ = std::move(name);
    set.key_ = std::move(key);
    std::vector<std::string> seen;
    for (const auto& [label, code] : words) {
      if (detail::trim(label).empty() || detail::trim(code).empty()) {
        throw ValidationError("term set '" + set.name_ + "' has an empty label or code");
      }
      std::vector<std::string> own{detail::to_lower(label)};
      if (detail::to_lower(code) != own.front()) own.push_back(detail::to_lower(code));
      for (const auto& text : own) {
        if (std::find(seen.begin(), seen.end(), text) != seen.end()) {
          throw ValidationError("term set '" + set.name_ + "' repeats '" + text + "'");
        }
      }
      seen.insert(seen.end(), own.begin(), own.end());
      set.terms_.push_back(LinguisticTerm{label, code, set.terms_.size()});
    }
    return set;
  }

  const std::string& name() const noexcept { return name_; }
  const std::string& key() const noexcept { return key_; }
  const std::vector<LinguisticTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Granularity g: the largest index.
  std::size_t g() const noexcept { return terms_.size() - 1; }

  const LinguisticTerm& at(std::size_t index) const {
    if (index >= terms_.size()) {
      throw DomainError("index " + std::to_string(index) + " out of range for '" + name_ + "'");
    }
    return terms_[index];
  }

  const LinguisticTerm* find(std::string_view word) const {
    for (const auto& t : terms_) {
      if (t.matches(word)) return &t;
    }
    return nullptr;
  }

  friend bool operator==(const TermSet&, const TermSet&) = default;

 private:
  std::string name_;
  std::string key_;
  std::vector<LinguisticTerm> terms_;
};

struct ParameterSchema {
  std::vector<TermSet> parameters;
  TermSet recommendation;

  const TermSet* find_parameter(std::string_view name) const {
    for (const auto& p : parameters) {
      if (p.name() == name) return &p;
    }
    return nullptr;
  }

  /// Parameter index for a canonical name, or for the recommendation set (returns parameters.size()).
  std::optional<std::size_t> position_of(std::string_view name) const {
    for (std::size_t i = 0; i < parameters.size(); ++i) {
      if (parameters[i].name() == name) return i;
    }
    if (recommendation.name() == name) return parameters.size();
    return std::nullopt;
  }

  const TermSet& set_at(std::size_t position) const {
    return position == parameters.size() ? recommendation : parameters.at(position);
  }

  friend bool operator==(const ParameterSchema&, const ParameterSchema&) = default;
};

/// One student's resolved feedback: a term per parameter, in schema order.
struct FeedbackRecord {
  std::string student_id;
  std::vector<LinguisticTerm> choices;
  /// Words exactly as supplied, kept for verbatim output.
  std::vector<std::string> words;

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(choices.size());
    for (const auto& c : choices) out.push_back(c.index);
    return out;
  }
};

enum class Method { extension_principle, symbolic, two_tuple, perceptual };

inline constexpr std::array<Method, 4> kAllMethods = {
    Method::extension_principle, Method::symbolic, Method::two_tuple, Method::perceptual};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::extension_principle: return "extension_principle";
    case Method::symbolic: return "symbolic";
    case Method::two_tuple: return "two_tuple";
    case Method::perceptual: return "perceptual";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view text) {
  for (auto m : kAllMethods) {
    if (detail::iequals(text, to_string(m))) return m;
  }
  return std::nullopt;
}

inline const std::string kTimeTaken = "Time taken to solve the question";
inline const std::string kSubjectKnowledge = "Subject's Knowledge";
inline const std::string kLiking = "Liking towards Subject";
inline const std::string kPreparation = "Perceived preparation level";
inline const std::string kStrategy = "Strategy of student";

/// The four assessment parameters and the five-word recommendation set.
inline ParameterSchema build_default_schema() {
  return ParameterSchema{
      {
          TermSet::create(kTimeTaken, "time_taken",
                          {{"Very little", "VL"}, {"Small", "S"}, {"Moderate", "M"},
                           {"Large", "L"}, {"Very Large", "VLA"}}),
          TermSet::create(kSubjectKnowledge, "subject_knowledge",
                          {{"Very Limited", "SVL"}, {"Limited", "SL"}, {"Moderate", "SM"},
                           {"Large", "SLA"}, {"Very Large", "SVLA"}}),
          TermSet::create(kLiking, "liking",
                          {{"Very Less", "AVL"}, {"Less", "AL"}, {"Moderate", "AM"},
                           {"High", "AH"}, {"Very High", "AVH"}}),
          TermSet::create(kPreparation, "preparation",
                          {{"Very Less", "PVL"}, {"Less", "PL"}, {"Moderate", "PM"},
                           {"High", "PH"}, {"Very High", "PVH"}}),
      },
      TermSet::create(kStrategy, "strategy",
                      {{"Not Good", "SSNG"}, {"Below Average", "SSBA"}, {"Average", "SSA"},
                       {"Good", "SSG"}, {"Very Good", "SSVG"}}),
  };
}

/// Resolves parameter-name -> word pairs against the schema. Every parameter
/// must be present under its canonical name; words match label or code
/// case-insensitively.
inline FeedbackRecord resolve_feedback(const ParameterSchema& schema, std::string student_id,
                                       const std::map<std::string, std::string>& raw) {
  for (const auto& [name, word] : raw) {
    if (schema.find_parameter(name) == nullptr) {
      throw SchemaError("unknown parameter '" + name + "'");
    }
  }
  FeedbackRecord record{std::move(student_id), {}, {}};
  for (const auto& parameter : schema.parameters) {
    const auto it = raw.find(parameter.name());
    if (it == raw.end()) throw SchemaError("missing parameter '" + parameter.name() + "'");
    const auto* term = parameter.find(it->second);
    if (term == nullptr) throw ResolutionError(parameter.name(), it->second);
    record.choices.push_back(*term);
    record.words.push_back(it->second);
  }
  return record;
}

}  // namespace cwwkit
