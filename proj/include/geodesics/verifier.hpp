#pragma once

// Machine checks of the analytic inequality chains behind the length bound
// for closed geodesics with two self-intersections.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "geodesics/collar.hpp"
#include "geodesics/errors.hpp"
#include "geodesics/report.hpp"

namespace geodesics::verifier {

/// Threshold on the length of the shortest closed sub-loop that splits the
/// proof into its two cases.
inline constexpr double kCaseThreshold = 1.06;

struct ConstantsTable {
  double M1;   // shortest non-simple closed geodesic
  double M2;   // shortest closed geodesic with two self-intersections
  double gap;  // M2 - M1

  /// Length 2 acosh(2k + 1) of the corkscrew geodesic winding k times.
  static double corkscrew(int k) { return 2.0 * std::acosh(2.0 * k + 1.0); }

  static ConstantsTable compute() {
    const double m1 = 4.0 * std::log(1.0 + std::sqrt(2.0));
    const double m2 = 2.0 * std::log(5.0 + 2.0 * std::sqrt(6.0));
    return {m1, m2, m2 - m1};
  }
};

namespace detail {
inline void require_above_two(double T) {
  if (!(T > 2.0)) throw DomainError("H(T) is defined for T > 2");
}
}  // namespace detail

/// H(T) = log(T/(T-2)) + 2 log(T + sqrt(T^2+1)).
inline double H(double T) {
  detail::require_above_two(T);
  return std::log(T / (T - 2.0)) + 2.0 * std::log(T + std::sqrt(T * T + 1.0));
}

inline double dH_dT(double T) {
  detail::require_above_two(T);
  return 2.0 / std::sqrt(T * T + 1.0) - 2.0 / (T * (T - 2.0));
}

struct RootBracket {
  double lo;
  double hi;
  double root;
  double residual;  // |dH/dT(root)|
};

/// Bisection for the unique critical point of H inside [3, 25/8].
inline RootBracket find_T0() {
  const double lo0 = 3.0, hi0 = 25.0 / 8.0;
  double lo = lo0, hi = hi0;
  if (!(dH_dT(lo) < 0.0 && dH_dT(hi) > 0.0)) {
    throw BracketFailure("dH/dT does not change sign from - to + on [3, 25/8]");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (dH_dT(mid) < 0.0 ? lo : hi) = mid;
  }
  const double root = std::abs(dH_dT(lo)) <= std::abs(dH_dT(hi)) ? lo : hi;
  const double residual = std::abs(dH_dT(root));
  if (residual > 1e-12) throw BracketFailure("bisection did not reach residual 1e-12");
  return {lo0, hi0, root, residual};
}

/// H1(s, t) = asinh(sinh(s t) cosh(w1(2t))).
inline double H1(double s, double t) {
  if (!(s > 0.0) || !(t > 0.0)) throw DomainError("H1 needs s > 0 and t > 0");
  return std::asinh(std::sinh(s * t) * std::cosh(collar::wide_width(2.0 * t)));
}

inline std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < points; ++i) {
    grid.push_back(points == 1 ? lo : lo * std::exp(ratio * i / (points - 1)));
  }
  grid.back() = hi;
  return grid;
}

struct ChainGrid {
  double t_lo = 1e-4;
  double t_hi = 5.0;
  int t_points = 10000;
  double alpha_lo = 1e-3;
  double alpha_hi = 6.0;
  int alpha_points = 1000;
};

/// Sign structure of dH/dT, the critical point and the resulting bound.
inline Report verify_h_analysis() {
  Report r{"h_analysis", {}, {}};
  const auto consts = ConstantsTable::compute();
  r.add("dHdT_negative_at_3", -dH_dT(3.0), Witness{{"T", 3.0}, {"dHdT", dH_dT(3.0)}});
  r.add("dHdT_positive_at_25_8", dH_dT(3.125), Witness{{"T", 3.125}, {"dHdT", dH_dT(3.125)}});

  const auto b = find_T0();
  r.add("T0_in_open_bracket", std::min(b.root - 3.0, 3.125 - b.root),
        Witness{{"T0", b.root}, {"residual", b.residual}});

  double worst_fd = 0.0, worst_T = 0.0;
  double sign_margin = INFINITY, sign_T = 0.0;
  for (double T : collar::uniform_grid(2.1, 50.0, 10000)) {
    const double h = 1e-5;
    const double fd = (H(T + h) - H(T - h)) / (2.0 * h);
    const double dev = std::abs(fd - dH_dT(T));
    if (dev > worst_fd) {
      worst_fd = dev;
      worst_T = T;
    }
    if (T == b.root) continue;
    const double signed_slope = T < b.root ? -dH_dT(T) : dH_dT(T);
    if (signed_slope < sign_margin) {
      sign_margin = signed_slope;
      sign_T = T;
    }
  }
  r.add("dHdT_matches_central_difference", 1e-6 - worst_fd, Witness{{"T", worst_T}, {"deviation", worst_fd}});
  r.add("dHdT_sign_changes_once_at_T0", sign_margin, Witness{{"T", sign_T}});

  const double h0 = H(b.root);
  const double intermediate = std::log(25.0 / 9.0) + 2.0 * std::log(3.0 + std::sqrt(10.0));
  r.add("H_T0_exceeds_intermediate_bound", h0 - intermediate, Witness{{"H_T0", h0}, {"bound", intermediate}});
  r.add("intermediate_bound_exceeds_M2", intermediate - consts.M2, Witness{{"bound", intermediate}, {"M2", consts.M2}});
  r.add("H_T0_exceeds_M2", h0 - consts.M2, Witness{{"H_T0", h0}, {"M2", consts.M2}});
  return r;
}

/// Concavity of H1 in its first argument and the chain that bounds the
/// length spent by extra turns inside a short collar from below by 1.06.
inline Report verify_concavity_chain(const ChainGrid& g = {}) {
  if (g.t_points < 100) throw DomainError("concavity chain needs at least 100 t grid points");
  Report r{"concavity_chain", {}, {}};
  const auto ts = log_grid(g.t_lo, g.t_hi, g.t_points);
  const auto alphas = collar::uniform_grid(g.alpha_lo, g.alpha_hi, g.alpha_points);
  constexpr double kTol = 1e-12;

  double worst_second = -INFINITY;
  Witness second_at;
  double worst_increment = INFINITY;
  Witness increment_at;
  double worst_subst = 0.0;
  Witness subst_at;
  for (double t : ts) {
    const double k = std::cosh(collar::wide_width(2.0 * t));
    auto h1 = [&](double s) { return std::asinh(std::sinh(s * t) * k); };
    const double base = 2.0 * h1(2.0) - 2.0 * h1(1.0);
    for (double s : alphas) {
      const double h = 1e-2 * s;
      const double second = h1(s - h) + h1(s + h) - 2.0 * h1(s);
      if (second > worst_second) {
        worst_second = second;
        second_at = {{"s", s}, {"t", t}};
      }
      // zeta winds alpha in (0, 1]; concavity makes the increment shrink in alpha.
      if (s <= 1.0) {
        const double inc = 2.0 * h1(1.0 + s) - 2.0 * h1(s) - base;
        if (inc < worst_increment) {
          worst_increment = inc;
          increment_at = {{"alpha", s}, {"t", t}};
        }
      }
    }
    const double u = 2.0 * std::cosh(0.5 * t) * std::cosh(0.5 * t);
    const double subst = 2.0 * std::asinh(u * (2.0 * u - 2.0)) - 2.0 * std::asinh(u);
    const double dev = std::abs(base - subst);
    if (dev > worst_subst) {
      worst_subst = dev;
      subst_at = {{"t", t}, {"u", u}};
    }
  }
  r.add("H1_concave_in_s", kTol - worst_second, second_at);
  r.add("turn_increment_at_least_first_turn", worst_increment + kTol, increment_at);
  r.add("u_substitution_identity", 1e-9 - worst_subst, subst_at);

  // u = 2 cosh^2(t/2) ranges over (2, 2 cosh^2(t_hi/2)].
  auto f = [](double u) { return 2.0 * std::asinh(2.0 * u) - 2.0 * std::asinh(u); };
  const double inf_value = f(2.0);
  double prev = -INFINITY;
  double mono_margin = INFINITY, drop_margin = INFINITY, floor_margin = INFINITY;
  Witness mono_at, drop_at;
  for (double t : ts) {
    const double u = 2.0 * std::cosh(0.5 * t) * std::cosh(0.5 * t);
    const double fu = f(u);
    if (fu - prev < mono_margin) {
      mono_margin = fu - prev;
      mono_at = {{"u", u}};
    }
    prev = fu;
    const double drop = 2.0 * std::asinh(u * (2.0 * u - 2.0)) - 2.0 * std::asinh(2.0 * u);
    if (drop < drop_margin) {
      drop_margin = drop;
      drop_at = {{"u", u}};
    }
    floor_margin = std::min(floor_margin, fu - inf_value);
  }
  r.add("u_bound_drop_valid_for_u_above_2", drop_margin + kTol, drop_at);
  r.add("increment_function_increasing_in_u", mono_margin, mono_at);
  r.add("increment_infimum_attained_at_u_2", floor_margin + kTol);
  r.add("infimum_exceeds_threshold", inf_value - kCaseThreshold, Witness{{"infimum", inf_value}});

  const auto c = ConstantsTable::compute();
  r.add("threshold_exceeds_gap", kCaseThreshold - c.gap, Witness{{"gap", c.gap}});
  r.add("threshold_separates_gap_and_infimum",
        std::min(kCaseThreshold - c.gap, inf_value - kCaseThreshold));
  return r;
}

/// The assembled lower bound H(T) for a geodesic crossing a collar whose
/// core has length 2t, checked term by term on a log-spaced t grid.
inline Report verify_case1_chain(const ChainGrid& g = {}) {
  Report r{"case1_chain", {}, {}};
  r.notes.push_back(
      "the crossing-arc term is the full collar crossing 2*w(2t) = 2*log((e^t+1)/(e^t-1))");
  const auto ts = log_grid(g.t_lo, g.t_hi, g.t_points);
  const auto consts = ConstantsTable::compute();
  const double h_t0 = H(find_T0().root);

  double min_excess = INFINITY;
  Witness excess_at;
  double worst_b = 0.0, worst_c = 0.0;
  Witness b_at, c_at;
  double min_sum = INFINITY;
  Witness sum_at;
  for (double t : ts) {
    // T = (e^t+1)^2 / (2 e^t) = 2 cosh^2(t/2); its excess over 2 is 2 sinh^2(t/2).
    const double excess = 2.0 * std::sinh(0.5 * t) * std::sinh(0.5 * t);
    const double T = std::pow(std::exp(t) + 1.0, 2) / (2.0 * std::exp(t));
    if (excess < min_excess) {
      min_excess = excess;
      excess_at = {{"t", t}, {"T", T}};
    }
    const double crossing = 2.0 * std::log((std::exp(t) + 1.0) / std::expm1(t));
    const double crossing_in_T = std::log1p(2.0 / excess);
    const double db = std::abs(crossing - crossing_in_T);
    if (db > worst_b) {
      worst_b = db;
      b_at = {{"t", t}};
    }
    const double half_wide = std::log((std::exp(0.5 * t) + 1.0) / std::expm1(0.5 * t));
    const double arc = 2.0 * std::asinh(std::sinh(t) * std::cosh(half_wide));
    const double arc_in_T = 2.0 * std::log(T + std::sqrt(T * T + 1.0));
    const double dc = std::abs(arc - arc_in_T);
    if (dc > worst_c) {
      worst_c = dc;
      c_at = {{"t", t}};
    }
    const double sum = 2.0 * collar::collar_width(2.0 * t) +
                       2.0 * std::asinh(std::sinh(t) * std::cosh(collar::wide_width(2.0 * t)));
    if (sum < min_sum) {
      min_sum = sum;
      sum_at = {{"t", t}, {"T", T}};
    }
  }
  r.add("T_exceeds_2", min_excess, excess_at);
  r.add("T_tends_to_2_as_t_to_0", 1e-6 - 2.0 * std::pow(std::sinh(0.5 * g.t_lo), 2));
  r.add("crossing_term_equals_log_T_over_T_minus_2", 1e-10 - worst_b, b_at);
  r.add("arc_term_equals_2_log_T_plus_root", 1e-9 - worst_c, c_at);
  sum_at.emplace_back("H_T0", h_t0);
  r.add("grid_minimum_at_least_H_T0", min_sum - h_t0 + 1e-9, sum_at);
  r.add("grid_minimum_exceeds_M2", min_sum - consts.M2, Witness{{"min", min_sum}, {"M2", consts.M2}});
  return r;
}

/// Internal consistency of the constants table.
inline Report verify_constants() {
  Report r{"constants", {}, {}};
  const auto c = ConstantsTable::compute();
  r.add("M2_equals_2acosh5", 1e-12 - std::abs(c.M2 - 2.0 * std::acosh(5.0)), Witness{{"M2", c.M2}});
  r.add("M1_equals_2acosh3", 1e-12 - std::abs(c.M1 - 2.0 * std::acosh(3.0)), Witness{{"M1", c.M1}});
  r.add("corkscrew_1_is_M1", 1e-12 - std::abs(ConstantsTable::corkscrew(1) - c.M1));
  r.add("corkscrew_2_is_M2", 1e-12 - std::abs(ConstantsTable::corkscrew(2) - c.M2));
  r.add("gap_below_threshold", kCaseThreshold - c.gap, Witness{{"gap", c.gap}});
  return r;
}

}  // namespace geodesics::verifier
