#pragma once

// Extension-principle evaluation: words become triangular type-1 numbers on
// [0,1], are averaged componentwise, and the mean is mapped back to the
// nearest recommendation term under a weighted Euclidean distance.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "cwwkit/error.hpp"

namespace cwwkit::t1 {

/// Triangular fuzzy number (left foot, apex, right foot).
struct TriTuple {
  double l = 0.0;
  double m = 0.0;
  double r = 0.0;

  bool ordered() const noexcept { return l <= m && m <= r; }
  friend bool operator==(const TriTuple&, const TriTuple&) = default;
};

struct DistanceWeights {
  double p1 = 0.2;
  double p2 = 0.6;
  double p3 = 0.2;
};

/// g+1 triangles with apexes at i/g; the two end terms are shoulders.
inline std::vector<TriTuple> uniform_triangular_partition(std::size_t cardinality) {
  if (cardinality < 2) throw DomainError("triangular partition needs g >= 1");
  const auto g = static_cast<double>(cardinality - 1);
  std::vector<TriTuple> terms;
  terms.reserve(cardinality);
  for (std::size_t i = 0; i < cardinality; ++i) {
    const auto k = static_cast<double>(i);
    terms.push_back(TriTuple{
        i == 0 ? 0.0 : (k - 1.0) / g,
        k / g,
        i + 1 == cardinality ? 1.0 : (k + 1.0) / g,
    });
  }
  return terms;
}

/// Componentwise mean.
inline TriTuple aggregate_tri_tuples(std::span<const TriTuple> inputs) {
  if (inputs.empty()) throw DomainError("cannot aggregate an empty list of tri-tuples");
  TriTuple sum;
  for (const auto& t : inputs) {
    sum.l += t.l;
    sum.m += t.m;
    sum.r += t.r;
  }
  const auto n = static_cast<double>(inputs.size());
  return TriTuple{sum.l / n, sum.m / n, sum.r / n};
}

inline double weighted_distance(const TriTuple& term, const TriTuple& c,
                                const DistanceWeights& w = {}) {
  const double dl = term.l - c.l;
  const double dm = term.m - c.m;
  const double dr = term.r - c.r;
  return std::sqrt(w.p1 * dl * dl + w.p2 * dm * dm + w.p3 * dr * dr);
}

struct Approximation {
  std::size_t index = 0;
  double distance = 0.0;
};

/// Distances closer than this are treated as equal; the lower index wins.
inline constexpr double kTieTolerance = 1e-12;

inline Approximation linguistic_approximation(const TriTuple& c,
                                              std::span<const TriTuple> recommendation_terms,
                                              const DistanceWeights& w = {}) {
  if (recommendation_terms.empty()) throw DomainError("no recommendation terms to match");
  Approximation best{0, weighted_distance(recommendation_terms[0], c, w)};
  for (std::size_t i = 1; i < recommendation_terms.size(); ++i) {
    const double d = weighted_distance(recommendation_terms[i], c, w);
    if (d < best.distance - kTieTolerance) best = {i, d};
  }
  return best;
}

}  // namespace cwwkit::t1
