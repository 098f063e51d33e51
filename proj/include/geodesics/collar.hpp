#pragma once

// Collar widths around short simple closed geodesics, the asymmetric
// (generalized) collar, and the cusp-neighbourhood constant.

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "geodesics/errors.hpp"

namespace geodesics::collar {

namespace detail {
inline void require_positive(double x) {
  if (!(x > 0.0)) throw NonPositiveLength("core length must be positive");
}
}  // namespace detail

/// Half-width w(x) = asinh(1/sinh(x/2)) of the standard embedded collar.
inline double collar_width(double x) {
  detail::require_positive(x);
  return std::asinh(1.0 / std::sinh(0.5 * x));
}

/// (w1(x), 2w(x) - w1(x)) with w1(x) = asinh(1/sinh(x/4)). The second
/// component is not clamped here; see CollarProfile.
inline std::pair<double, double> generalized_width(double x) {
  detail::require_positive(x);
  const double wide = std::asinh(1.0 / std::sinh(0.25 * x));
  return {wide, 2.0 * collar_width(x) - wide};
}

inline double wide_width(double x) { return generalized_width(x).first; }

/// 2 log((e^{x/4}+1)/(e^{x/4}-1)), the gap across the glued hexagons.
inline double hexagon_gap(double x) {
  detail::require_positive(x);
  const double e = std::exp(0.25 * x);
  // expm1 keeps the denominator accurate for small x.
  return 2.0 * std::log((e + 1.0) / std::expm1(0.25 * x));
}

/// Length of the horocycle bounding an embedded cusp neighbourhood.
inline constexpr double cusp_horocycle_bound() { return 4.0; }

struct CollarProfile {
  double core_length;
  double w;
  double w1;
  double w_narrow;       // max(0, 2w - w1)
  bool narrow_clamped;   // true when 2w - w1 < 0

  static CollarProfile of(double core_length) {
    const auto [wide, narrow] = generalized_width(core_length);
    return {core_length, collar_width(core_length), wide, narrow < 0.0 ? 0.0 : narrow,
            narrow < 0.0};
  }
};

/// Uniform grid on [lo, hi] with both endpoints included.
inline std::vector<double> uniform_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1));
  }
  return grid;
}

struct ScanResult {
  double min_wide_minus_w;          // min over grid of w1 - w
  double max_wide_minus_twice_w;    // max over (0, narrow_limit] of w1 - 2w
  double max_gap_deviation;         // max |hexagon_gap - 2 w1|
  bool strictly_decreasing;         // w and w1 on the grid
  std::optional<double> crossover;  // first x where w1 >= 2w
  int points;
};

/// Grid scan of the width identities and inequalities on (0, upper].
///
/// The crossover of w1 = 2w is located by bisection between the last grid
/// point with w1 < 2w and the first with w1 >= 2w.
inline ScanResult scan(double upper = 20.0, int points = 10000, double narrow_limit = 2.3) {
  const double lo = upper / points;
  const auto grid = uniform_grid(lo, upper, points);
  ScanResult r{INFINITY, -INFINITY, 0.0, true, std::nullopt, points};
  double prev_w = INFINITY, prev_w1 = INFINITY;
  std::optional<double> below;
  for (double x : grid) {
    const double w = collar_width(x);
    const double w1 = wide_width(x);
    r.min_wide_minus_w = std::min(r.min_wide_minus_w, w1 - w);
    if (x <= narrow_limit) r.max_wide_minus_twice_w = std::max(r.max_wide_minus_twice_w, w1 - 2.0 * w);
    r.max_gap_deviation = std::max(r.max_gap_deviation, std::abs(hexagon_gap(x) - 2.0 * w1));
    if (!(w < prev_w && w1 < prev_w1)) r.strictly_decreasing = false;
    prev_w = w;
    prev_w1 = w1;
    if (!r.crossover) {
      if (w1 < 2.0 * w) {
        below = x;
      } else if (below) {
        double a = *below, b = x;
        for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it) {
          const double m = 0.5 * (a + b);
          (wide_width(m) < 2.0 * collar_width(m) ? a : b) = m;
        }
        r.crossover = b;
      }
    }
  }
  return r;
}

}  // namespace geodesics::collar
