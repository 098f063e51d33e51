#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "geodesics/collar.hpp"
#include "geodesics/verifier.hpp"
#include "geodesics/winding.hpp"
#include "oracles.hpp"

using namespace geodesics;
using namespace geodesics::winding;

TEST(Queries, Validate) {
  EXPECT_THROW(CollarArcQuery::make(0, 1, 1), DomainError);
  EXPECT_THROW(CollarArcQuery::make(1, -1, 1), DomainError);
  EXPECT_THROW(CollarArcQuery::make(1, 1, NAN), DomainError);
  EXPECT_THROW(CuspArcQuery::make(0), DomainError);
  EXPECT_THROW(CuspArcQuery::make(INFINITY), DomainError);
}

TEST(CollarArc, Examples) {
  // Small width: the arc hugs the core.
  EXPECT_NEAR(collar_arc_length(CollarArcQuery::make(1.3, 0.7, 1e-9)), 1.3 * 0.7, 1e-12);
  // W = 1, core 2t, width w1(2t) reproduces 2 H1(1, t).
  for (double t : {0.1, 0.5, 1.0, 2.0}) {
    const auto q = CollarArcQuery::make(1.0, 2 * t, collar::wide_width(2 * t));
    EXPECT_NEAR(collar_arc_length(q), 2 * verifier::H1(1.0, t), 1e-13);
  }
  const double t = std::asinh(1.0);
  EXPECT_NEAR(collar_arc_length(CollarArcQuery::make(2.0, 2 * t, t)), 2 * std::asinh(4.0), 1e-13);
}

TEST(CollarArc, StrictlyIncreasing) {
  const std::vector<double> grid{0.1, 0.3, 0.7, 1.2, 2.0, 3.5};
  for (double a : grid) {
    for (double b : grid) {
      for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double lo = grid[i], hi = grid[i + 1];
        EXPECT_LT(collar_arc_length(CollarArcQuery::make(lo, a, b)), collar_arc_length(CollarArcQuery::make(hi, a, b)));
        EXPECT_LT(collar_arc_length(CollarArcQuery::make(a, lo, b)), collar_arc_length(CollarArcQuery::make(a, hi, b)));
        EXPECT_LT(collar_arc_length(CollarArcQuery::make(a, b, lo)), collar_arc_length(CollarArcQuery::make(a, b, hi)));
      }
    }
  }
}

TEST(CollarArc, SaccheriOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> w(0.05, 4.0), c(0.05, 3.0), d(0.01, 2.5);
  for (int i = 0; i < 500; ++i) {
    const auto q = CollarArcQuery::make(w(rng), c(rng), d(rng));
    EXPECT_NEAR(collar_arc_length(q), saccheri_top_side(q), 1e-9);
  }
}

TEST(CollarArc, SaccheriOracleIndependentDistance) {
  // Same quadrilateral measured with the long-double distance.
  const auto q = CollarArcQuery::make(1.7, 1.0, 0.5);
  const oracle::real h = std::exp(oracle::real(1.7));
  const oracle::cplx p1(std::tanh(oracle::real(0.5)), 1 / std::cosh(oracle::real(0.5)));
  const oracle::real len = oracle::distance(p1, h * p1);
  EXPECT_NEAR(collar_arc_length(q), static_cast<double>(len), 1e-12);
}

TEST(CollarArc, RoundTrip) {
  EXPECT_NEAR(winding_from_length(collar_arc_length(CollarArcQuery::make(1.7, 1.0, 0.5)), 1.0, 0.5), 1.7, 1e-10);
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> w(0.01, 5.0), c(0.05, 3.0), d(0.0, 2.5);
  for (int i = 0; i < 500; ++i) {
    const double W = w(rng), core = c(rng), width = d(rng) + 1e-3;
    const double l = collar_arc_length(CollarArcQuery::make(W, core, width));
    EXPECT_NEAR(winding_from_length(l, core, width), W, 1e-10);
  }
  // Below the W -> 0 limit the winding is small and never negative.
  EXPECT_GE(winding_from_length(1e-12, 1.0, 2.0), 0.0);
  EXPECT_LT(winding_from_length(1e-12, 1.0, 2.0), 1e-11);
  EXPECT_THROW(winding_from_length(0.0, 1.0, 1.0), DomainError);
}

TEST(CuspArc, Examples) {
  EXPECT_NEAR(cusp_arc_length(CuspArcQuery::make(1.0)), std::acosh(9.0), 1e-14);
  EXPECT_NEAR(cusp_arc_length(CuspArcQuery::make(1.0)), 2 * std::log(2 + std::sqrt(5.0)), 1e-14);
  EXPECT_NEAR(cusp_arc_length(CuspArcQuery::make(0.5)), 2 * std::log(1 + std::sqrt(2.0)), 1e-14);
  EXPECT_LT(cusp_arc_length(CuspArcQuery::make(1e-10)), 1e-9);
}

TEST(CuspArc, TwoFormsAgree) {
  for (double W = 1e-3; W < 100; W *= 1.37) {
    EXPECT_NEAR(cusp_arc_length(CuspArcQuery::make(W)), cusp_arc_length_asinh(W), 1e-12);
  }
}

TEST(CuspArc, RoundTrip) {
  EXPECT_NEAR(cusp_winding_from_length(cusp_arc_length(CuspArcQuery::make(3.0))), 3.0, 1e-12);
  for (double W = 1e-3; W < 50; W *= 1.5) {
    EXPECT_NEAR(cusp_winding_from_length(cusp_arc_length(CuspArcQuery::make(W))), W, 1e-10 * std::max(1.0, W));
  }
}

TEST(CuspLemma, GeometricOracle) {
  EXPECT_LT(cusp_lemma_deviation(1.0), 1e-12);
  double worst = 0.0;
  for (double W : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) worst = std::max(worst, cusp_lemma_deviation(W));
  EXPECT_LT(worst, 1e-12);
  EXPECT_LT(cusp_lemma_deviation(1e-8), 1e-12);
  EXPECT_LT(verify_cusp_lemma_geometrically(10.0, 50), 1e-12);
  EXPECT_THROW(verify_cusp_lemma_geometrically(-1.0, 5), DomainError);
}

TEST(CuspLemma, LongDoubleDistance) {
  for (double W : {0.1, 1.0, 7.0}) {
    const auto d = oracle::distance({-2.0L * W, 1.0L}, {2.0L * W, 1.0L});
    EXPECT_NEAR(cusp_arc_length(CuspArcQuery::make(W)), static_cast<double>(d), 1e-12);
  }
}
