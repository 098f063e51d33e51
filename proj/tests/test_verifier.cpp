#include <gtest/gtest.h>

#include <cmath>

#include "geodesics/collar.hpp"
#include "geodesics/verifier.hpp"
#include "geodesics/winding.hpp"
#include "oracles.hpp"

using namespace geodesics;
using namespace geodesics::verifier;

namespace {

void expect_all_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << r.suite;
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << "." << c.id << " margin " << c.margin;
}

}  // namespace

TEST(Constants, Values) {
  const auto c = ConstantsTable::compute();
  EXPECT_NEAR(c.M1, oracle::kM1, 1e-14);
  EXPECT_NEAR(c.M2, oracle::kM2, 1e-14);
  EXPECT_NEAR(c.gap, oracle::kGap, 1e-14);
  EXPECT_NEAR(c.M2, 4.584864, 1e-6);
  EXPECT_LT(c.gap, kCaseThreshold);
  EXPECT_NEAR(ConstantsTable::corkscrew(1), c.M1, 1e-14);
  EXPECT_NEAR(ConstantsTable::corkscrew(2), c.M2, 1e-14);
  expect_all_pass(verify_constants());
}

TEST(H, Examples) {
  EXPECT_NEAR(H(3.0), std::log(3.0) + 2 * std::log(3 + std::sqrt(10.0)), 1e-14);
  EXPECT_NEAR(H(3.0), 4.735505207132243, 1e-12);
  EXPECT_GT(H(2.0 + 1e-12), 25.0);
  EXPECT_GT(H(1e6), 29.0);
  EXPECT_THROW(H(2.0), DomainError);
  EXPECT_THROW(dH_dT(1.0), DomainError);
}

TEST(H, DerivativeMatchesCentralDifference) {
  for (double T = 2.05; T < 60.0; T *= 1.07) {
    const double h = 1e-5;
    EXPECT_NEAR(dH_dT(T), (H(T + h) - H(T - h)) / (2 * h), 1e-6) << T;
  }
  EXPECT_NEAR(dH_dT(4.0), (H(4.0 + 1e-5) - H(4.0 - 1e-5)) / 2e-5, 1e-6);
}

TEST(H, SignsAtBracket) {
  EXPECT_LT(dH_dT(3.0), 0.0);
  EXPECT_NEAR(dH_dT(3.0), 2 / std::sqrt(10.0) - 2.0 / 3.0, 1e-15);
  EXPECT_GT(dH_dT(25.0 / 8.0), 0.0);
}

TEST(T0, RootAndBounds) {
  const auto r = find_T0();
  EXPECT_EQ(r.lo, 3.0);
  EXPECT_EQ(r.hi, 3.125);
  EXPECT_GT(r.root, 3.0);
  EXPECT_LT(r.root, 3.125);
  EXPECT_LE(r.residual, 1e-12);
  EXPECT_NEAR(r.root, oracle::kT0, 1e-12);
  EXPECT_NEAR(H(r.root), oracle::kHT0, 1e-12);
  EXPECT_GT(H(r.root), oracle::kIntermediate);
  EXPECT_GT(H(r.root), oracle::kM2);
  // Deterministic.
  EXPECT_EQ(find_T0().root, r.root);
}

TEST(T0, GlobalMinimumOnSampledGrid) {
  const double h0 = H(find_T0().root);
  for (double T = 2.001; T < 1000.0; T *= 1.01) EXPECT_GE(H(T), h0 - 1e-12) << T;
}

TEST(H1, Examples) {
  const double t = std::asinh(1.0);
  // Pinned regression at t = asinh(1): long-double evaluation of the same expression.
  const long double k = std::cosh(oracle::wide_width(2.0L * t));
  const long double ref = std::asinh(std::sinh(2.0L * t) * k);
  EXPECT_NEAR(H1(2.0, t), static_cast<double>(ref), 1e-14);
  EXPECT_NEAR(H1(2.0, t), 2.619560576453013, 1e-13);
  EXPECT_THROW(H1(0.0, 1.0), DomainError);
  EXPECT_THROW(H1(1.0, 0.0), DomainError);
}

TEST(H1, ConcaveInS) {
  const double t = 0.3;
  EXPECT_LT(H1(1.9, t) + H1(2.1, t) - 2 * H1(2.0, t), 0.0);
}

TEST(H1, USubstitution) {
  for (double t : log_grid(1e-3, 5.0, 200)) {
    const double u = 2 * std::cosh(t / 2) * std::cosh(t / 2);
    EXPECT_NEAR(2 * H1(2, t) - 2 * H1(1, t), 2 * std::asinh(u * (2 * u - 2)) - 2 * std::asinh(u), 1e-9);
  }
}

TEST(H1, ConsistentWithCollarArc) {
  for (double core : {0.2, 1.0, 2.2}) {
    for (double W : {0.5, 1.0, 2.5}) {
      const auto q = winding::CollarArcQuery::make(W, core, collar::wide_width(core));
      EXPECT_NEAR(2 * H1(W, core / 2), winding::collar_arc_length(q), 1e-12);
    }
  }
}

TEST(Chains, AllChecksPass) {
  expect_all_pass(verify_h_analysis());
  expect_all_pass(verify_concavity_chain());
  expect_all_pass(verify_case1_chain());
}

TEST(Chains, ThresholdSeparates) {
  EXPECT_LT(oracle::kGap, kCaseThreshold);
  EXPECT_LT(kCaseThreshold, oracle::kAsinhDifference);
  EXPECT_NEAR(2 * std::asinh(4.0) - 2 * std::asinh(2.0), oracle::kAsinhDifference, 1e-14);
  EXPECT_NEAR(2 * std::log(4 + std::sqrt(17.0)) - 2 * std::log(2 + std::sqrt(5.0)), oracle::kAsinhDifference, 1e-14);
}

TEST(Chains, CaseOneAtTEqualsOne) {
  const double t = 1.0;
  const double T = (std::exp(t) + 1) * (std::exp(t) + 1) / (2 * std::exp(t));
  EXPECT_NEAR(T, 2.5430806348152437, 1e-14);
  EXPECT_NEAR(2 * std::log((std::exp(t) + 1) / (std::exp(t) - 1)), std::log(T / (T - 2)), 1e-12);
  EXPECT_NEAR(2 * std::asinh(std::sinh(t) * std::cosh(std::log((std::exp(t / 2) + 1) / (std::exp(t / 2) - 1)))),
              2 * std::log(T + std::sqrt(T * T + 1)), 1e-12);
}

TEST(Chains, ConcavityRequiresGrid) {
  ChainGrid g;
  g.t_points = 50;
  EXPECT_THROW(verify_concavity_chain(g), DomainError);
}

TEST(Chains, ReportsAreDeterministic) {
  const auto a = verify_concavity_chain(), b = verify_concavity_chain();
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].id, b.checks[i].id);
    EXPECT_EQ(a.checks[i].margin, b.checks[i].margin);
  }
}

TEST(Chains, CrossingTermNoteIsPresent) {
  const auto r = verify_case1_chain();
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("2*w(2t)"), std::string::npos);
}
