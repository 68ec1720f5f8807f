#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "cwwkit/error.hpp"
#include "cwwkit/rounding.hpp"

namespace cwwkit::two_tuple {

/// (s_i, alpha): a term index plus a symbolic translation in [-0.5, 0.5].
struct TwoTuple {
  std::size_t term_index = 0;
  double alpha = 0.0;

  double value() const noexcept { return static_cast<double>(term_index) + alpha; }
};

/// Arithmetic mean of the term indices.
inline double aggregate_beta(std::span<const std::size_t> indices) {
  if (indices.empty()) throw DomainError("cannot aggregate an empty index list");
  double sum = 0.0;
  for (auto i : indices) sum += static_cast<double>(i);
  return sum / static_cast<double>(indices.size());
}

/// Splits beta into its nearest term (halves up) and the signed remainder.
inline TwoTuple to_two_tuple(double beta, std::size_t g) {
  if (!(beta >= 0.0 && beta <= static_cast<double>(g))) {
    throw DomainError("beta " + std::to_string(beta) + " outside [0, g]");
  }
  const auto index = static_cast<std::size_t>(round_half_away(beta));
  return TwoTuple{index, beta - static_cast<double>(index)};
}

}  // namespace cwwkit::two_tuple
