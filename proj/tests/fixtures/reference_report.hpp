#pragma once

// Wraps the reference results in an EvaluationReport so the same
// ranking and uniqueness code can run over the printed cells.

#include "fixtures/reference_results.hpp"
#include "support.hpp"

namespace cwwkit::testing {

inline EvaluationReport reference_report() {
  const auto& rec = schema().recommendation;
  const auto term = [&](const char* code) { return *rec.find(code); };
  EvaluationReport report;
  for (const auto& p : schema().parameters) {
    report.parameter_names.push_back(p.name());
    report.parameter_keys.push_back(p.key());
  }
  report.methods.assign(kAllMethods.begin(), kAllMethods.end());
  report.codebook_id = "reference";
  for (const auto& row : reference_rows()) {
    ReportRow r;
    r.feedback = record(std::to_string(row.student), row.words);
    r.student_id = r.feedback->student_id;
    r.words = r.feedback->words;
    ExtensionResult ext;
    ext.matched = {row.extension[0], row.extension[1], row.extension[2]};
    r.cells.push_back({Recommendation{Method::extension_principle, ext, term(row.extension_word)}, {}});
    r.cells.push_back({Recommendation{Method::symbolic,
                                      SymbolicResult{static_cast<std::size_t>(row.symbolic)},
                                      term(row.symbolic_word)},
                       {}});
    TwoTupleResult tt;
    tt.beta = row.beta;
    r.cells.push_back({Recommendation{Method::two_tuple, tt, term(row.two_tuple_word)}, {}});
    PerceptualResult pc;
    pc.mean = row.perceptual;
    pc.reported_mean = row.perceptual;
    r.cells.push_back({Recommendation{Method::perceptual, pc, term(row.perceptual_word)}, {}});
    report.rows.push_back(std::move(r));
  }
  return report;
}

}  // namespace cwwkit::testing
