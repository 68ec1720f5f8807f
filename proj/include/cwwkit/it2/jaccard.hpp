#pragma once

#include <algorithm>
#include <cstddef>

#include "cwwkit/error.hpp"
#include "cwwkit/it2/fou.hpp"

namespace cwwkit::it2 {

/// Jaccard similarity of two sampled FOUs:
/// (sum min(U_a,U_b) + sum min(L_a,L_b)) / (sum max(U_a,U_b) + sum max(L_a,L_b)).
inline double jaccard_similarity(const SampledFou& a, const SampledFou& b) {
  if (!(a.grid == b.grid)) throw DomainError("Jaccard similarity needs FOUs on the same grid");
  const std::size_t n = a.grid.size();
  if (a.upper.size() != n || a.lower.size() != n || b.upper.size() != n || b.lower.size() != n) {
    throw DomainError("sampled FOU does not match its grid");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    num += std::min(a.upper[k], b.upper[k]) + std::min(a.lower[k], b.lower[k]);
    den += std::max(a.upper[k], b.upper[k]) + std::max(a.lower[k], b.lower[k]);
  }
  if (!(den > 0.0)) throw DegenerateInputError("both FOUs are zero on the grid");
  return num / den;
}

inline double jaccard_similarity(const TrapezoidIT2& a, const TrapezoidIT2& b,
                                 const DiscretizationGrid& grid = {}) {
  return jaccard_similarity(sample(a, grid), sample(b, grid));
}

}  // namespace cwwkit::it2
