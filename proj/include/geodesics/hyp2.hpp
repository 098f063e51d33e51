#pragma once

// Upper half-plane primitives: Moebius isometries, distances, axes of
// hyperbolic elements and the trace/length dictionary.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <utility>

#include "geodesics/errors.hpp"

namespace geodesics {

inline constexpr double kDeterminantTolerance = 1e-12;
inline constexpr double kParabolicTolerance = 1e-12;

namespace detail {

// Kahan's 2x2 determinant: accurate even when ad and bc nearly cancel.
inline double det2(double a, double b, double c, double d) {
  const double w = b * c;
  const double e = std::fma(-b, c, w);
  const double f = std::fma(a, d, -w);
  return f + e;
}

inline bool nearly_equal(double x, double y, double rel = 1e-12) {
  return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace detail

/// A point z = x + iy of the upper half-plane, y > 0.
class PointUHP {
 public:
  static PointUHP make(double x, double y) {
    if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
      throw InvalidPoint("upper half-plane point needs finite x and y > 0");
    }
    return PointUHP(x, y);
  }

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  friend bool operator==(const PointUHP&, const PointUHP&) = default;

 private:
  PointUHP(double x, double y) : x_(x), y_(y) {}
  double x_;
  double y_;
};

/// A point of the ideal boundary R u {infinity}.
class BoundaryPoint {
 public:
  static BoundaryPoint at(double x) {
    if (!std::isfinite(x)) return infinity();
    return BoundaryPoint(x);
  }
  static BoundaryPoint infinity() { return BoundaryPoint(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Finite value; must not be called on the point at infinity.
  double value() const { return *value_; }

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

  /// Extended-line order: finite values ascending, infinity last.
  friend bool operator<(const BoundaryPoint& l, const BoundaryPoint& r) {
    if (l.is_infinite()) return false;
    if (r.is_infinite()) return true;
    return l.value() < r.value();
  }

  friend std::ostream& operator<<(std::ostream& os, const BoundaryPoint& p) {
    if (p.is_infinite()) return os << "inf";
    return os << p.value();
  }

 private:
  BoundaryPoint() = default;
  explicit BoundaryPoint(double x) : value_(x) {}
  std::optional<double> value_;
};

namespace detail {
inline bool same_point(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinite() || q.is_infinite()) {
    return p.is_infinite() && q.is_infinite();
  }
  return nearly_equal(p.value(), q.value());
}
}  // namespace detail

/// Unordered endpoint pair of a complete geodesic, stored in canonical order.
class Axis {
 public:
  Axis(BoundaryPoint p, BoundaryPoint q) : lo_(p), hi_(q) {
    if (detail::same_point(p, q)) {
      throw GeometryError("axis endpoints must be distinct");
    }
    if (hi_ < lo_) std::swap(lo_, hi_);
  }

  const BoundaryPoint& first() const noexcept { return lo_; }
  const BoundaryPoint& second() const noexcept { return hi_; }

  friend bool operator==(const Axis&, const Axis&) = default;

 private:
  BoundaryPoint lo_;
  BoundaryPoint hi_;
};

/// Endpoints of an axis oriented along the translation direction.
struct OrientedAxis {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
  Axis unoriented() const { return Axis(repelling, attracting); }
};

enum class IsometryKind { elliptic, parabolic, hyperbolic };

/// A real 2x2 matrix of unit determinant acting on the upper half-plane.
class Isometry {
 public:
  Isometry() = default;  // identity

  /// Accepts any matrix with positive determinant and rescales it to det 1.
  static Isometry make(double a, double b, double c, double d) {
    const double det = detail::det2(a, b, c, d);
    if (!(det > 0.0) || !std::isfinite(det)) {
      throw GeometryError("isometry needs a positive finite determinant");
    }
    Isometry g(a, b, c, d);
    if (std::abs(det - 1.0) > kDeterminantTolerance) g.scale(1.0 / std::sqrt(det));
    return g;
  }

  static Isometry identity() { return Isometry(); }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  double trace() const noexcept { return a_ + d_; }
  double determinant() const noexcept { return detail::det2(a_, b_, c_, d_); }

  IsometryKind kind() const noexcept {
    const double t = std::abs(trace());
    if (std::abs(t - 2.0) <= kParabolicTolerance) return IsometryKind::parabolic;
    return t < 2.0 ? IsometryKind::elliptic : IsometryKind::hyperbolic;
  }

  Isometry inverse() const noexcept { return Isometry(d_, -b_, -c_, a_); }

  /// Renormalizes only drift beyond what rounding of ad and bc explains; a
  /// fixed 1e-12 trigger would rescale large products by their own
  /// determinant error.
  friend Isometry operator*(const Isometry& g, const Isometry& h) {
    Isometry p(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_, g.c_ * h.a_ + g.d_ * h.c_,
               g.c_ * h.b_ + g.d_ * h.d_);
    const double det = p.determinant();
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(p.a_ * p.d_) + std::abs(p.b_ * p.c_));
    if (std::abs(det - 1.0) > std::max(kDeterminantTolerance, noise) && det > 0.0) p.scale(1.0 / std::sqrt(det));
    return p;
  }

  PointUHP apply(const PointUHP& z) const {
    // (a z + b)/(c z + d) for z = x + iy.
    const double x = z.x(), y = z.y();
    const double re_den = c_ * x + d_;
    const double den = re_den * re_den + c_ * c_ * y * y;
    const double re_num = a_ * x + b_;
    const double nx = (re_num * re_den + a_ * c_ * y * y) / den;
    const double ny = y / den;
    return PointUHP::make(nx, ny);
  }

  BoundaryPoint apply(const BoundaryPoint& p) const {
    if (p.is_infinite()) {
      if (c_ == 0.0) return BoundaryPoint::infinity();
      return BoundaryPoint::at(a_ / c_);
    }
    const double x = p.value();
    const double den = c_ * x + d_;
    if (den == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::at((a_ * x + b_) / den);
  }

  Axis apply(const Axis& ax) const { return Axis(apply(ax.first()), apply(ax.second())); }

  friend std::ostream& operator<<(std::ostream& os, const Isometry& g) {
    return os << "[[" << g.a_ << ", " << g.b_ << "], [" << g.c_ << ", " << g.d_ << "]]";
  }

 private:
  Isometry(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
  void scale(double s) {
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
  }

  double a_ = 1.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 1.0;
};

inline Isometry compose(const Isometry& g, const Isometry& h) { return g * h; }

inline Isometry power(const Isometry& g, int n) {
  Isometry base = n < 0 ? g.inverse() : g;
  Isometry result;
  for (int k = 0; k < std::abs(n); ++k) result = result * base;
  return result;
}

/// Translation length 2 acosh(|tr|/2) of a hyperbolic isometry.
inline double translation_length(const Isometry& g) {
  if (g.kind() != IsometryKind::hyperbolic) {
    throw NotHyperbolic("translation length needs |trace| > 2");
  }
  return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

/// Hyperbolic distance; the half-angle form stays accurate for close points.
inline double dist(const PointUHP& p, const PointUHP& q) {
  const double euclid = std::hypot(p.x() - q.x(), p.y() - q.y());
  return 2.0 * std::asinh(euclid / (2.0 * std::sqrt(p.y() * q.y())));
}

/// Fixed points of a hyperbolic g, ordered repelling -> attracting.
inline OrientedAxis oriented_axis_of(const Isometry& g) {
  if (g.kind() != IsometryKind::hyperbolic) {
    throw NotHyperbolic("axis needs a hyperbolic isometry");
  }
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
  if (c == 0.0) {
    const BoundaryPoint finite = BoundaryPoint::at(b / (d - a));
    // g(x) = (a x + b)/d expands about the finite point iff |a| > |d|.
    if (std::abs(a) > std::abs(d)) return {finite, BoundaryPoint::infinity()};
    return {BoundaryPoint::infinity(), finite};
  }
  // c x^2 + (d - a) x - b = 0, solved without cancellation.
  const double lin = d - a;
  const double t = g.trace();
  const double root_disc = std::sqrt(t * t - 4.0);
  const double q = -0.5 * (lin + std::copysign(root_disc, lin));
  const double x1 = q / c;
  const double x2 = -b / q;
  // The derivative at a fixed point x is 1/(c x + d)^2.
  if (std::abs(c * x1 + d) > 1.0) {
    return {BoundaryPoint::at(x2), BoundaryPoint::at(x1)};
  }
  return {BoundaryPoint::at(x1), BoundaryPoint::at(x2)};
}

inline Axis axis_of(const Isometry& g) { return oriented_axis_of(g).unoriented(); }

/// True iff the two complete geodesics cross transversally in H^2.
inline bool axes_cross(const Axis& alpha, const Axis& beta) {
  const BoundaryPoint& lo = alpha.first();
  const BoundaryPoint& hi = alpha.second();
  for (const BoundaryPoint* e : {&beta.first(), &beta.second()}) {
    if (detail::same_point(*e, lo) || detail::same_point(*e, hi)) {
      throw SharedEndpoint("axes share an ideal endpoint");
    }
  }
  // Interleaving on the circle, cut open at infinity.
  auto inside = [&](const BoundaryPoint& e) { return lo < e && e < hi; };
  return inside(beta.first()) != inside(beta.second());
}

namespace detail {

struct GeodesicShape {
  bool vertical;
  double center;  // foot of the vertical line, or circle center
  double radius;  // unused for vertical lines
};

inline GeodesicShape shape_of(const Axis& ax) {
  if (ax.second().is_infinite()) return {true, ax.first().value(), 0.0};
  const double p = ax.first().value(), q = ax.second().value();
  return {false, 0.5 * (p + q), 0.5 * (q - p)};
}

}  // namespace detail

/// Intersection point of two crossing geodesics, or nullopt if disjoint.
inline std::optional<PointUHP> crossing_point(const Axis& alpha, const Axis& beta) {
  if (!axes_cross(alpha, beta)) return std::nullopt;
  auto s1 = detail::shape_of(alpha);
  auto s2 = detail::shape_of(beta);
  if (s1.vertical && s2.vertical) return std::nullopt;
  if (s2.vertical) std::swap(s1, s2);
  if (s1.vertical) {
    const double dx = s1.center - s2.center;
    return PointUHP::make(s1.center, std::sqrt(std::max(0.0, (s2.radius - dx) * (s2.radius + dx))));
  }
  const double x = 0.5 * (s1.center + s2.center) +
                   0.5 * (s1.radius - s2.radius) * (s1.radius + s2.radius) / (s2.center - s1.center);
  const double dx = x - s1.center;
  return PointUHP::make(x, std::sqrt(std::max(0.0, (s1.radius - dx) * (s1.radius + dx))));
}

/// Acute angle in [0, pi/2] between two crossing geodesics.
inline double crossing_angle(const Axis& alpha, const Axis& beta) {
  auto s1 = detail::shape_of(alpha);
  auto s2 = detail::shape_of(beta);
  if (s2.vertical) std::swap(s1, s2);
  double cos_angle = 0.0;
  if (s1.vertical) {
    cos_angle = std::abs(s1.center - s2.center) / s2.radius;
  } else {
    const double sep = s1.center - s2.center;
    cos_angle = (s1.radius * s1.radius + s2.radius * s2.radius - sep * sep) /
                (2.0 * s1.radius * s2.radius);
  }
  return std::acos(std::min(1.0, std::abs(cos_angle)));
}

/// Hyperbolic distance from a point to a complete geodesic.
inline double distance_to_geodesic(const PointUHP& z, const Axis& ax) {
  const auto s = detail::shape_of(ax);
  double sinh_d = 0.0;
  if (s.vertical) {
    sinh_d = std::abs(z.x() - s.center) / z.y();
  } else {
    const double dx = z.x() - s.center;
    sinh_d = std::abs(dx * dx + z.y() * z.y() - s.radius * s.radius) / (2.0 * s.radius * z.y());
  }
  return std::asinh(sinh_d);
}

}  // namespace geodesics
