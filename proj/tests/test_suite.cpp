#include <gtest/gtest.h>

#include "geodesics/suite.hpp"

using namespace geodesics;

TEST(Suite, RunVerifyPasses) {
  const auto r = suite::run_verify();
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << " margin " << c.margin;
  EXPECT_NE(r.find("constants.M2_equals_2acosh5"), nullptr);
  EXPECT_NE(r.find("concavity_chain.threshold_separates_gap_and_infimum"), nullptr);
}

TEST(Suite, SubReportsPass) {
  EXPECT_TRUE(suite::pants_equivalence().passed());
  EXPECT_TRUE(suite::collar_identities().passed());
  EXPECT_TRUE(suite::winding_lemmas().passed());
}

TEST(Suite, OtherSeedsAlsoPass) {
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    EXPECT_TRUE(suite::pants_equivalence(100, seed).passed()) << seed;
    EXPECT_TRUE(suite::winding_lemmas(50, seed).passed()) << seed;
  }
}

TEST(Suite, Deterministic) {
  const auto a = suite::pants_equivalence(), b = suite::pants_equivalence();
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].margin, b.checks[i].margin);
}

TEST(Suite, AppendPrefixesIds) {
  Report outer{"outer", {}, {}};
  Report inner{"inner", {}, {"a note"}};
  inner.add("x", 1.0);
  inner.add("y", -1.0);
  outer.append(inner);
  ASSERT_EQ(outer.checks.size(), 2u);
  EXPECT_EQ(outer.checks[0].id, "inner.x");
  EXPECT_TRUE(outer.checks[0].pass);
  EXPECT_FALSE(outer.checks[1].pass);
  EXPECT_FALSE(outer.passed());
  EXPECT_EQ(outer.notes.front(), "inner: a note");
}
