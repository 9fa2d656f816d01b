#include <gtest/gtest.h>

#include "parry/criteria.hpp"
#include "parry/power_sums.hpp"

using namespace parry;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }
const char* kT1 = "x^12-x^10-x^9+x^4+x^3-x-1";
}  // namespace

TEST(Solomyak, Examples) {
  EXPECT_EQ(solomyak_test(P("x^3-5x^2-8x+5")).outcome, Outcome::NonParry);
  EXPECT_EQ(solomyak_test(P("x^4-x-1")).outcome, Outcome::Inconclusive);
  EXPECT_EQ(solomyak_test(P("x^2-x-1")).outcome, Outcome::Inconclusive);
  auto v = solomyak_test(P("x^3-5x^2-8x+5"));
  EXPECT_TRUE(v.non_parry());
  EXPECT_EQ(v.status().kind, StatusKind::NonParry);
  EXPECT_EQ(v.status().criterion, Criterion::Solomyak);
}

TEST(Boyd, Examples) {
  auto v = boyd_test(P("x^2-x-3"));
  EXPECT_EQ(v.outcome, Outcome::NonParry);
  EXPECT_EQ(v.tail, 3);
  EXPECT_EQ(boyd_test(P("x^2-x-1")).outcome, Outcome::Inconclusive);
  EXPECT_EQ(boyd_test(P("x^3-5x^2-2x+5")).outcome, Outcome::Inconclusive);
}

TEST(Akiyama, MinimalWitnessIndices) {
  auto v = akiyama_test(P(kT1), 10000);
  ASSERT_EQ(v.outcome, Outcome::NonParry);
  EXPECT_EQ(v.index, 82u);
  auto v3 = akiyama_test(min_poly_of_power(P(kT1), 3), 10000);
  ASSERT_EQ(v3.outcome, Outcome::NonParry);
  EXPECT_EQ(v3.index, 21u);
  auto b = akiyama_test(P("x^4-x-1"), 10000);
  EXPECT_EQ(b.outcome, Outcome::NonParry);
  EXPECT_TRUE(b.index.has_value());
}

TEST(Akiyama, ParryInputStaysInconclusive) {
  // beta^2 of the table polynomial is Parry; the scan must never fire on it.
  auto v = akiyama_test(min_poly_of_power(P(kT1), 2), 2000);
  EXPECT_EQ(v.outcome, Outcome::Inconclusive);
}

TEST(KBound, Examples) {
  EXPECT_EQ(k_bound(P(kT1)), 16u);
  EXPECT_EQ(k_bound(P("x^4-x-1")), 8u);
  EXPECT_EQ(k_bound(P("x^6-x^5-1")), 15u);
  EXPECT_EQ(k_bound(P("x^3-5x^2-8x+5")), 1u);
}

TEST(NpBound, Examples) {
  // The bound dominates the true order: x^4-x-1 has order 0, the table
  // polynomial order 2.
  for (const char* p : {"x^4-x-1", kT1, "x^3-5x^2-8x+5"}) {
    OrderBound b = np_bound(P(p));
    EXPECT_GE(b.upper, b.value.hi().to_rational()) << p;
    EXPECT_GT(b.value.lo().to_rational(), 0) << p;
  }
  EXPECT_GE(np_bound(P(kT1)).upper, 2);
}
