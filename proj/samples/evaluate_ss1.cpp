// Scores one student with all four methods using the built-in codebook.

#include <iostream>

#include "cwwkit/cwwkit.hpp"

int main() {
  const auto schema = cwwkit::build_default_schema();
  const auto codebook = cwwkit::default_codebook(schema);
  const auto ss1 = cwwkit::resolve_feedback(schema, "SS1",
                                            {{cwwkit::kTimeTaken, "Small"},
                                             {cwwkit::kSubjectKnowledge, "Large"},
                                             {cwwkit::kLiking, "Moderate"},
                                             {cwwkit::kPreparation, "Moderate"}});
  for (auto method : cwwkit::kAllMethods) {
    const auto rec = cwwkit::evaluate_student(ss1, method, &codebook, schema);
    std::cout << cwwkit::to_string(method) << ": " << rec.numeric_text() << ' '
              << rec.linguistic.label << " (" << rec.linguistic.code << ")\n";
  }
}
