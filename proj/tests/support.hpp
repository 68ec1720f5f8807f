#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cwwkit/cwwkit.hpp"
#include "fixtures/reference_results.hpp"

namespace cwwkit::testing {

inline const ParameterSchema& schema() {
  static const ParameterSchema s = build_default_schema();
  return s;
}

inline const Codebook& codebook() {
  static const Codebook cb = default_codebook(schema());
  return cb;
}

/// Resolves four words given in schema order.
inline FeedbackRecord record(const std::string& id, const std::array<const char*, 4>& words) {
  std::map<std::string, std::string> raw;
  for (std::size_t p = 0; p < 4; ++p) raw[schema().parameters[p].name()] = words[p];
  return resolve_feedback(schema(), id, raw);
}

inline std::vector<FeedbackRecord> case_study_records() {
  std::vector<FeedbackRecord> out;
  for (const auto& row : reference_rows()) out.push_back(record(std::to_string(row.student), row.words));
  return out;
}

inline it2::TrapezoidIT2 word_fou(const std::string& parameter, const std::string& word) {
  return lookup(codebook(), parameter, word);
}

}  // namespace cwwkit::testing
