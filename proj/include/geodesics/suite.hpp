#pragma once

// The full verification suite: analytic chains, the pants length formula
// against its holonomy oracle, the collar identities and the winding lemmas.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "geodesics/collar.hpp"
#include "geodesics/pants.hpp"
#include "geodesics/report.hpp"
#include "geodesics/verifier.hpp"
#include "geodesics/winding.hpp"

namespace geodesics::suite {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Closed form of Gamma_{m,n} against the trace of A^m B^n on random pants
/// with boundary lengths in [0, 4] and 1 <= m, n <= 5.
inline Report pants_equivalence(int instances = 200, std::uint64_t seed = kDefaultSeed) {
  Report r{"pants_equivalence", {}, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> length(0.0, 4.0);
  std::uniform_int_distribution<int> winding(1, 5);
  double worst = 0.0;
  Witness at;
  for (int i = 0; i < instances; ++i) {
    const double l1 = length(rng), l2 = length(rng), l3 = length(rng);
    const int m = winding(rng), n = winding(rng);
    const pants::PantsBoundary p(l1, l2, l3);
    const pants::CurveClass k(m, n);
    const double dev = std::abs(pants::gamma_mn_length(p, k) - pants::trace_length_oracle(p, k));
    if (dev >= worst) {
      worst = dev;
      at = {{"l1", l1}, {"l2", l2}, {"l3", l3}, {"m", double(m)}, {"n", double(n)}, {"deviation", dev}};
    }
  }
  r.add("formula_matches_trace_oracle", 1e-9 - worst, at);
  return r;
}

/// Width identities and inequalities on a grid over (0, 20].
inline Report collar_identities(int points = 10000) {
  Report r{"collar", {}, {}};
  const auto s = collar::scan(20.0, points, 2.3);
  r.add("hexagon_gap_equals_twice_wide_width", 1e-12 - s.max_gap_deviation,
        Witness{{"max_deviation", s.max_gap_deviation}});
  r.add("wide_width_exceeds_width", s.min_wide_minus_w, Witness{{"min_w1_minus_w", s.min_wide_minus_w}});
  r.add("wide_width_below_twice_width_up_to_2.3", -s.max_wide_minus_twice_w,
        Witness{{"max_w1_minus_2w", s.max_wide_minus_twice_w}});
  r.add("widths_strictly_decreasing", s.strictly_decreasing ? 0.0 : -1.0);
  if (s.crossover) r.notes.push_back("w1 = 2w crossover near x = " + std::to_string(*s.crossover));
  return r;
}

/// Cusp lemma on a 6-point grid against the UHP distance; collar lemma on
/// random triples against the Saccheri quadrilateral.
inline Report winding_lemmas(int triples = 100, std::uint64_t seed = kDefaultSeed) {
  Report r{"winding", {}, {}};
  double cusp_worst = 0.0;
  Witness cusp_at;
  for (double W : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double dev = winding::cusp_lemma_deviation(W);
    if (dev >= cusp_worst) {
      cusp_worst = dev;
      cusp_at = {{"W", W}, {"deviation", dev}};
    }
  }
  r.add("cusp_formula_matches_distance", 1e-12 - cusp_worst, cusp_at);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> wind(0.1, 3.0), core(0.1, 3.0), width(0.1, 2.0);
  double collar_worst = 0.0, inverse_worst = 0.0;
  Witness collar_at;
  for (int i = 0; i < triples; ++i) {
    const auto q = winding::CollarArcQuery::make(wind(rng), core(rng), width(rng));
    const double len = winding::collar_arc_length(q);
    const double dev = std::abs(len - winding::saccheri_top_side(q));
    if (dev >= collar_worst) {
      collar_worst = dev;
      collar_at = {{"W", q.W}, {"core_length", q.core_length}, {"width", q.width}, {"deviation", dev}};
    }
    inverse_worst =
        std::max(inverse_worst, std::abs(winding::winding_from_length(len, q.core_length, q.width) - q.W));
  }
  r.add("collar_formula_matches_saccheri", 1e-9 - collar_worst, collar_at);
  r.add("collar_winding_round_trip", 1e-9 - inverse_worst, Witness{{"max_deviation", inverse_worst}});
  return r;
}

/// Everything `verify` runs. Passes iff every check has a nonnegative margin.
inline Report run_verify() {
  Report r{"verify", {}, {}};
  r.append(verifier::verify_constants());
  r.append(verifier::verify_h_analysis());
  r.append(verifier::verify_concavity_chain());
  r.append(verifier::verify_case1_chain());
  r.append(pants_equivalence());
  r.append(collar_identities());
  r.append(winding_lemmas());
  return r;
}

}  // namespace geodesics::suite
