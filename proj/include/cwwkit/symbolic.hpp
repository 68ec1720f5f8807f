#pragma once

// Symbolic (ordinal) evaluation: a recursive convex combination acting
// directly on term indices, rounding back onto the term set at every step.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cwwkit/error.hpp"
#include "cwwkit/rounding.hpp"

namespace cwwkit::symbolic {

class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Throws DomainError unless every weight is in [0,1] and they sum to 1.
  static WeightVector create(std::vector<double> weights) {
    if (weights.empty()) throw DomainError("weight vector is empty");
    for (double w : weights) {
      if (!(w >= 0.0 && w <= 1.0)) throw DomainError("weight outside [0,1]");
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance) throw DomainError("weights must sum to 1");
    WeightVector v;
    v.weights_ = std::move(weights);
    return v;
  }

  static WeightVector equal(std::size_t n) {
    if (n == 0) throw DomainError("weight vector is empty");
    return create(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  std::span<const double> values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

/// Non-increasing, stable. The recursion below consumes terms in this order.
inline std::vector<std::size_t> sort_terms_descending(std::vector<std::size_t> indices) {
  std::stable_sort(indices.begin(), indices.end(), std::greater<>{});
  return indices;
}

/// Two-term combination: min(g, second + round(w1 * (first - second))) with
/// first >= second, halves rounded up.
inline std::size_t sm2(double w1, std::size_t first_index, std::size_t second_index,
                       std::size_t g) {
  if (first_index > g || second_index > first_index) {
    throw DomainError("sm2 needs 0 <= second <= first <= g");
  }
  if (!(w1 >= 0.0 && w1 <= 1.0)) throw DomainError("sm2 weight outside [0,1]");
  const double span = static_cast<double>(first_index - second_index);
  const auto step = static_cast<std::size_t>(round_half_away(w1 * span));
  return std::min(g, second_index + step);
}

namespace detail {

inline std::size_t aggregate_sorted(std::span<const std::size_t> indices,
                                    std::span<const double> weights, std::size_t g) {
  if (indices.size() == 1) return indices.front();
  const double w1 = weights.front();
  const auto tail_w = weights.subspan(1);
  const double tail_sum = std::accumulate(tail_w.begin(), tail_w.end(), 0.0);
  std::vector<double> renormalised(tail_w.size());
  for (std::size_t h = 0; h < tail_w.size(); ++h) {
    renormalised[h] = tail_sum > 0.0 ? tail_w[h] / tail_sum
                                     : 1.0 / static_cast<double>(tail_w.size());
  }
  const std::size_t rest = aggregate_sorted(indices.subspan(1), renormalised, g);
  return sm2(std::clamp(w1, 0.0, 1.0), indices.front(), rest, g);
}

}  // namespace detail

/// Recursive convex combination of indices already sorted non-increasing.
inline std::size_t sm_aggregate(std::span<const std::size_t> indices, const WeightVector& w,
                                std::size_t g) {
  if (indices.empty()) throw DomainError("cannot aggregate an empty index list");
  if (indices.size() != w.size()) {
    throw DomainError("index list has " + std::to_string(indices.size()) + " entries but " +
                      std::to_string(w.size()) + " weights");
  }
  if (!std::is_sorted(indices.begin(), indices.end(), std::greater<>{})) {
    throw DomainError("sm_aggregate expects indices sorted non-increasing");
  }
  if (indices.front() > g) throw DomainError("index exceeds g");
  return detail::aggregate_sorted(indices, w.values(), g);
}

}  // namespace cwwkit::symbolic
