#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cwwkit/error.hpp"

namespace cwwkit::it2 {

/// Membership of a trapezoid with knots (a,b,c,d) and plateau `height`.
/// Zero-width edges act as steps; the knot itself takes the plateau value.
inline double trapezoid_membership(double x, double a, double b, double c, double d,
                                   double height) {
  if (x < a || x > d) return 0.0;
  if (x >= b && x <= c) return height;
  if (x < b) return height * (x - a) / (b - a);  // a < x < b, so b > a
  return height * (d - x) / (d - c);             // c < x < d
}

/// Interval type-2 word model: trapezoidal UMF (a,b,c,d) of height 1 and
/// trapezoidal LMF (e,f,g,i) of height h.
class TrapezoidIT2 {
 public:
  struct Params {
    double a, b, c, d;
    double e, f, g, i;
    double h;
  };

  /// Slack for the pointwise containment check; codebook data is rounded to 2 decimals.
  static constexpr double kContainmentSlack = 1e-6;

  /// Validates ordering, height and LMF <= UMF; throws ValidationError naming the constraint.
  static TrapezoidIT2 create(const Params& p) {
    const std::array<double, 9> all{p.a, p.b, p.c, p.d, p.e, p.f, p.g, p.i, p.h};
    for (double v : all) {
      if (!std::isfinite(v)) throw ValidationError("parameter is not a finite number");
    }
    if (!(p.a <= p.b && p.b <= p.c && p.c <= p.d)) {
      throw ValidationError("UMF knots must satisfy a <= b <= c <= d");
    }
    if (!(p.e <= p.f && p.f <= p.g && p.g <= p.i)) {
      throw ValidationError("LMF knots must satisfy e <= f <= g <= i");
    }
    if (p.h > 1.0) throw ValidationError("LMF height exceeds 1");
    if (!(p.h > 0.0)) throw ValidationError("LMF height must be positive");
    if (p.e < p.a || p.i > p.d) throw ValidationError("LMF support must lie inside UMF support");
    TrapezoidIT2 fou(p);
    if (!fou.lower_within_upper()) {
      throw ValidationError("LMF exceeds UMF somewhere on its support");
    }
    return fou;
  }

  const Params& params() const noexcept { return p_; }
  double lmf_height() const noexcept { return p_.h; }
  double support_min() const noexcept { return p_.a; }
  double support_max() const noexcept { return p_.d; }

  double upper(double x) const { return trapezoid_membership(x, p_.a, p_.b, p_.c, p_.d, 1.0); }
  double lower(double x) const {
    return trapezoid_membership(x, p_.e, p_.f, p_.g, p_.i, p_.h);
  }

  std::array<double, 9> as_array() const {
    return {p_.a, p_.b, p_.c, p_.d, p_.e, p_.f, p_.g, p_.i, p_.h};
  }

  friend bool operator==(const TrapezoidIT2& x, const TrapezoidIT2& y) {
    return x.as_array() == y.as_array();
  }

 private:
  explicit TrapezoidIT2(const Params& p) : p_(p) {}

  // Both MFs are piecewise linear between the union of their knots, so checking
  // at each knot (and just either side of it, for steps) and each midpoint
  // covers every segment.
  bool lower_within_upper() const {
    std::vector<double> knots{p_.a, p_.b, p_.c, p_.d, p_.e, p_.f, p_.g, p_.i};
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    std::vector<double> probes;
    for (std::size_t k = 0; k < knots.size(); ++k) {
      const double eps = 1e-9 * std::max(1.0, std::abs(knots[k]));
      probes.insert(probes.end(), {knots[k] - eps, knots[k], knots[k] + eps});
      if (k + 1 < knots.size()) probes.push_back(0.5 * (knots[k] + knots[k + 1]));
    }
    return std::all_of(probes.begin(), probes.end(), [this](double x) {
      return lower(x) <= upper(x) + kContainmentSlack;
    });
  }

  Params p_;
};

/// Uniform samples x_1..x_N on [min, max].
class DiscretizationGrid {
 public:
  static constexpr std::size_t kDefaultSamples = 1001;

  DiscretizationGrid() : DiscretizationGrid(0.0, 10.0, kDefaultSamples) {}

  DiscretizationGrid(double domain_min, double domain_max, std::size_t sample_count)
      : min_(domain_min), max_(domain_max), n_(sample_count) {
    if (n_ < 3) throw DomainError("grid needs at least 3 samples");
    if (!(max_ > min_)) throw DomainError("grid domain must have max > min");
  }

  double domain_min() const noexcept { return min_; }
  double domain_max() const noexcept { return max_; }
  std::size_t size() const noexcept { return n_; }
  double step() const noexcept { return (max_ - min_) / static_cast<double>(n_ - 1); }

  /// 0-based sample position; the last sample is exactly domain_max.
  double x(std::size_t k) const noexcept {
    return k + 1 == n_ ? max_ : min_ + static_cast<double>(k) * step();
  }

  std::vector<double> samples() const {
    std::vector<double> xs(n_);
    for (std::size_t k = 0; k < n_; ++k) xs[k] = x(k);
    return xs;
  }

  friend bool operator==(const DiscretizationGrid&, const DiscretizationGrid&) = default;

 private:
  double min_;
  double max_;
  std::size_t n_;
};

/// An FOU known only through its membership values on a grid.
struct SampledFou {
  DiscretizationGrid grid;
  std::vector<double> upper;
  std::vector<double> lower;
};

inline SampledFou sample(const TrapezoidIT2& fou, const DiscretizationGrid& grid) {
  SampledFou s{grid, std::vector<double>(grid.size()), std::vector<double>(grid.size())};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    s.upper[k] = fou.upper(x);
    s.lower[k] = fou.lower(x);
  }
  return s;
}

}  // namespace cwwkit::it2
