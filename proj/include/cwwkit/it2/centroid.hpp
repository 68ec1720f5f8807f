#pragma once

// Centroid type-reduction of an interval type-2 set sampled on a grid.
//
// For a switch index k (1-based, 1 <= k <= N):
//   y_l(k) = (sum_{i<=k} x_i U_i + sum_{i>k} x_i L_i) / (sum_{i<=k} U_i + sum_{i>k} L_i)
//   y_r(k) = (sum_{i<=k} x_i L_i + sum_{i>k} x_i U_i) / (sum_{i<=k} L_i + sum_{i>k} U_i)
// c_l = min_k y_l(k), c_r = max_k y_r(k). Both are found with the enhanced
// Karnik-Mendel iteration; candidates with a zero denominator are skipped.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "cwwkit/error.hpp"
#include "cwwkit/it2/fou.hpp"

namespace cwwkit::it2 {

struct CentroidInterval {
  double c_l = 0.0;
  double c_r = 0.0;
  std::size_t switch_left = 1;   // L, 1-based grid index
  std::size_t switch_right = 1;  // R, 1-based grid index
};

inline double centroid_mean(const CentroidInterval& ci) { return 0.5 * (ci.c_l + ci.c_r); }

namespace detail {

struct SwitchResult {
  double value;
  std::size_t k;
};

// `first` weights the leading k samples, `second` the rest.
// sign = +1 searches for the minimum, -1 for the maximum. Prefix sums of
// `first` and suffix sums of `second` only add nonnegative terms, so an empty
// denominator is exactly zero.
inline SwitchResult scan_switch_points(std::span<const double> x, std::span<const double> first,
                                       std::span<const double> second, int sign) {
  const std::size_t n = x.size();
  std::vector<double> tail_num(n + 1, 0.0);
  std::vector<double> tail_den(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    tail_num[i] = tail_num[i + 1] + x[i] * second[i];
    tail_den[i] = tail_den[i + 1] + second[i];
  }
  double head_num = 0.0;
  double head_den = 0.0;
  SwitchResult best{0.0, 0};
  for (std::size_t k = 1; k <= n; ++k) {
    head_num += x[k - 1] * first[k - 1];
    head_den += first[k - 1];
    const double den = head_den + tail_den[k];
    if (!(den > 0.0)) continue;
    const double y = (head_num + tail_num[k]) / den;
    if (best.k == 0 || sign * y < sign * best.value) best = {y, k};
  }
  if (best.k == 0) throw DegenerateInputError("FOU has no usable membership mass on the grid");
  return best;
}

// Enhanced Karnik-Mendel iteration. Leading k samples use `first`, the rest
// `second`. Sums are rebuilt each step: incremental updates can cancel to a
// tiny positive denominator where the true one is zero.
inline SwitchResult ekm_switch(std::span<const double> x, std::span<const double> first,
                               std::span<const double> second, std::size_t seed, int sign) {
  const std::size_t n = x.size();
  std::size_t k = std::clamp<std::size_t>(seed, 1, n);
  for (std::size_t iter = 0; iter <= n; ++iter) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = i < k ? first[i] : second[i];
      num += x[i] * w;
      den += w;
    }
    if (!(den > 0.0)) break;
    const double c = num / den;
    // k' = number of samples with x_i <= c, kept inside [1, N].
    auto next = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), c) - x.begin());
    next = std::clamp<std::size_t>(next, 1, n);
    if (next == k) return {c, k};
    k = next;
  }
  // Zero denominator along the path, or no convergence: exhaustive scan.
  return scan_switch_points(x, first, second, sign);
}

}  // namespace detail

/// Centroid interval [c_l, c_r] of a sampled FOU.
inline CentroidInterval centroid(const SampledFou& fou) {
  const auto xs = fou.grid.samples();
  const std::size_t n = xs.size();
  if (fou.upper.size() != n || fou.lower.size() != n) {
    throw DomainError("sampled FOU does not match its grid");
  }
  double mass = 0.0;
  for (double u : fou.upper) mass += u;
  if (!(mass > 0.0)) throw DegenerateInputError("FOU has zero membership mass on the grid");

  const auto seed_left = static_cast<std::size_t>(std::lround(static_cast<double>(n) / 2.4));
  const auto seed_right = static_cast<std::size_t>(std::lround(static_cast<double>(n) / 1.7));
  const auto left = detail::ekm_switch(xs, fou.upper, fou.lower, seed_left, +1);
  const auto right = detail::ekm_switch(xs, fou.lower, fou.upper, seed_right, -1);
  return CentroidInterval{left.value, right.value, left.k, right.k};
}

/// Samples the FOU on `grid` and type-reduces it. The UMF support must lie in the grid domain.
inline CentroidInterval centroid(const TrapezoidIT2& fou, const DiscretizationGrid& grid = {}) {
  if (fou.support_min() < grid.domain_min() || fou.support_max() > grid.domain_max()) {
    throw DomainError("FOU support extends outside the grid domain");
  }
  return centroid(sample(fou, grid));
}

}  // namespace cwwkit::it2
