#pragma once

// Length of a geodesic arc inside a collar or a cusp neighbourhood as a
// function of its winding number, the inverse maps, and geometric oracles
// that measure the same arcs directly in the upper half-plane.

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "geodesics/collar.hpp"
#include "geodesics/errors.hpp"
#include "geodesics/hyp2.hpp"

namespace geodesics::winding {

struct CollarArcQuery {
  double W;            // winding number
  double core_length;  // length of the core geodesic
  double width;        // distance of the arc endpoints from the core

  static CollarArcQuery make(double W, double core_length, double width) {
    for (double v : {W, core_length, width}) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError("collar arc query needs positive finite values");
      }
    }
    return {W, core_length, width};
  }
};

struct CuspArcQuery {
  double W;

  static CuspArcQuery make(double W) {
    if (!(W > 0.0) || !std::isfinite(W)) throw DomainError("cusp winding must be positive");
    return {W};
  }
};

/// 2 asinh(sinh(W l / 2) cosh(w)).
inline double collar_arc_length(const CollarArcQuery& q) {
  return 2.0 * std::asinh(std::sinh(0.5 * q.W * q.core_length) * std::cosh(q.width));
}

/// 2 log(2W + sqrt(4W^2 + 1)), the arc between points 4W apart on the
/// length-4 horocycle.
inline double cusp_arc_length(const CuspArcQuery& q) {
  return 2.0 * std::log(2.0 * q.W + std::sqrt(4.0 * q.W * q.W + 1.0));
}

/// Same quantity as cusp_arc_length, written as 2 asinh(2W).
inline double cusp_arc_length_asinh(double W) { return 2.0 * std::asinh(2.0 * W); }

/// Inverse of collar_arc_length in W. Lengths at or below the W -> 0 limit
/// map to 0.
inline double winding_from_length(double l, double core_length, double width) {
  if (!(l > 0.0)) throw DomainError("arc length must be positive");
  if (!(core_length > 0.0) || !(width >= 0.0)) {
    throw DomainError("winding_from_length needs core_length > 0, width >= 0");
  }
  const double half = std::asinh(std::sinh(0.5 * l) / std::cosh(width));
  return std::max(0.0, 2.0 * half / core_length);
}

/// Inverse of cusp_arc_length.
inline double cusp_winding_from_length(double l) {
  if (!(l > 0.0)) throw DomainError("arc length must be positive");
  return 0.5 * std::sinh(0.5 * l);
}

/// Places P1 = (-2W, 1), P2 = (2W, 1) on the lifted length-4 horocycle and
/// returns |dist(P1, P2) - cusp_arc_length(W)|.
inline double cusp_lemma_deviation(double W) {
  const auto q = CuspArcQuery::make(W);
  const double measured = dist(PointUHP::make(-2.0 * W, 1.0), PointUHP::make(2.0 * W, 1.0));
  return std::abs(measured - cusp_arc_length(q));
}

/// Maximum cusp_lemma_deviation over a log-spaced grid of `samples` winding
/// numbers ending at W (starting at W / 100), W itself always included.
inline double verify_cusp_lemma_geometrically(double W, int samples) {
  if (!(W > 0.0) || samples < 1) throw DomainError("need W > 0 and samples >= 1");
  double worst = cusp_lemma_deviation(W);
  for (int i = 0; i + 1 < samples; ++i) {
    const double t = static_cast<double>(i) / std::max(1, samples - 1);
    worst = std::max(worst, cusp_lemma_deviation(W * std::pow(100.0, t - 1.0)));
  }
  return worst;
}

/// Top side of the Saccheri quadrilateral built over a core segment of
/// length W * core_length on the imaginary axis, with legs of length
/// `width` on the same side. Endpoints are reached by moving along the
/// perpendicular geodesics |z| = const, so the result is independent of the
/// closed form.
inline double saccheri_top_side(const CollarArcQuery& q) {
  auto leg_end = [&](double height) {
    // Point at distance `width` from i*height along the circle |z| = height.
    return PointUHP::make(height * std::tanh(q.width), height / std::cosh(q.width));
  };
  const PointUHP p1 = leg_end(1.0);
  const PointUHP p2 = leg_end(std::exp(q.W * q.core_length));
  return dist(p1, p2);
}

}  // namespace geodesics::winding
