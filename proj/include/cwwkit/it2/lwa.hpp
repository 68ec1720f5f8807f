#pragma once

// Linguistic weighted average of interval type-2 words with crisp weights.

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cwwkit/error.hpp"
#include "cwwkit/it2/fou.hpp"

namespace cwwkit::it2 {

namespace detail {

inline std::vector<double> normalised_weights(std::size_t count, std::span<const double> weights) {
  if (count == 0) throw DomainError("LWA needs at least one input");
  if (weights.size() != count) throw DomainError("LWA weight count does not match inputs");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("LWA weights must be nonnegative");
    sum += w;
  }
  if (!(sum > 0.0)) throw DomainError("LWA weights are all zero");
  std::vector<double> out(weights.begin(), weights.end());
  for (double& w : out) w /= sum;
  return out;
}

}  // namespace detail

/// Parameter-wise weighted average of all nine trapezoid parameters,
/// including the LMF height. Exact for the UMF; only approximates the LMF
/// when input heights differ.
inline TrapezoidIT2 lwa_parameterwise(std::span<const TrapezoidIT2> inputs,
                                      std::span<const double> weights) {
  const auto w = detail::normalised_weights(inputs.size(), weights);
  std::array<double, 9> acc{};
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto p = inputs[k].as_array();
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += w[k] * p[j];
  }
  return TrapezoidIT2::create(
      {acc[0], acc[1], acc[2], acc[3], acc[4], acc[5], acc[6], acc[7], acc[8]});
}

/// A type-1 membership function described by nested alpha-cuts
/// [left[j], right[j]] at increasing levels[j]; linear between levels.
struct AlphaCutSet {
  std::vector<double> levels;
  std::vector<double> left;
  std::vector<double> right;

  double height() const { return levels.back(); }

  double membership(double x) const {
    if (x < left.front() || x > right.front()) return 0.0;
    if (x >= left.back() && x <= right.back()) return levels.back();
    if (x < left.back()) {
      // left is nondecreasing in the level.
      std::size_t j = static_cast<std::size_t>(
                          std::upper_bound(left.begin(), left.end(), x) - left.begin()) -
                      1;
      const double t = (x - left[j]) / (left[j + 1] - left[j]);
      return levels[j] + t * (levels[j + 1] - levels[j]);
    }
    // right is nonincreasing in the level.
    std::size_t j = 0;
    while (j + 1 < right.size() && right[j + 1] >= x) ++j;
    const double t = (right[j] - x) / (right[j] - right[j + 1]);
    return levels[j] + t * (levels[j + 1] - levels[j]);
  }
};

/// Result of the alpha-cut LWA: UMF and LMF as alpha-cut sets.
struct AlphaCutFou {
  AlphaCutSet upper;
  AlphaCutSet lower;

  double lmf_height() const { return lower.height(); }
};

inline SampledFou sample(const AlphaCutFou& fou, const DiscretizationGrid& grid) {
  SampledFou s{grid, std::vector<double>(grid.size()), std::vector<double>(grid.size())};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    s.upper[k] = fou.upper.membership(x);
    s.lower[k] = fou.lower.membership(x);
  }
  return s;
}

/// Alpha-cut LWA. UMF cuts are averaged at `alpha_levels` levels on [0,1];
/// LMF cuts on [0, h_min], where h_min is the smallest LMF height among the
/// inputs carrying positive weight. With crisp weights each cut's endpoints
/// are plain weighted averages.
inline AlphaCutFou lwa_exact(std::span<const TrapezoidIT2> inputs, std::span<const double> weights,
                             std::size_t alpha_levels = 21) {
  if (alpha_levels < 2) throw DomainError("LWA needs at least 2 alpha levels");
  const auto w = detail::normalised_weights(inputs.size(), weights);
  double h_min = 1.0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (w[k] > 0.0) h_min = std::min(h_min, inputs[k].lmf_height());
  }

  AlphaCutFou out;
  const auto m = alpha_levels;
  for (auto* set : {&out.upper, &out.lower}) {
    set->levels.resize(m);
    set->left.assign(m, 0.0);
    set->right.assign(m, 0.0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double frac = static_cast<double>(j) / static_cast<double>(m - 1);
    const double au = frac;
    const double al = frac * h_min;
    out.upper.levels[j] = au;
    out.lower.levels[j] = al;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      const auto& p = inputs[k].params();
      out.upper.left[j] += w[k] * (p.a + au * (p.b - p.a));
      out.upper.right[j] += w[k] * (p.d - au * (p.d - p.c));
      const double s = al / p.h;
      out.lower.left[j] += w[k] * (p.e + s * (p.f - p.e));
      out.lower.right[j] += w[k] * (p.i - s * (p.i - p.g));
    }
  }
  out.upper.levels.back() = 1.0;
  out.lower.levels.back() = h_min;
  return out;
}

}  // namespace cwwkit::it2
