#pragma once

#include <cmath>

namespace cwwkit {

/// Absolute slack used when deciding whether a value sits on a rounding half-point.
inline constexpr double kRoundingSlack = 1e-9;

/// Rounds to the nearest integer, halves away from zero. Values within
/// kRoundingSlack of a half-point count as exactly on it, so 0.49999999999
/// produced by weight renormalisation still rounds like 0.5.
inline long round_half_away(double x) {
  if (x < 0) return -round_half_away(-x);
  return static_cast<long>(std::floor(x + 0.5 + kRoundingSlack));
}

}  // namespace cwwkit
