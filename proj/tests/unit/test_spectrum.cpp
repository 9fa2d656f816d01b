#include <gtest/gtest.h>

#include "parry/power_sums.hpp"
#include "parry/spectrum.hpp"

using namespace parry;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }
using V = std::vector<std::size_t>;
}  // namespace

TEST(Spectrum, PisotAndSalemAreInfinite) {
  auto r = parry_spectrum(P("x^2-x-1"));
  EXPECT_TRUE(r.infinite);
  EXPECT_EQ(r.ord_string(), "inf");
  EXPECT_EQ(r.spec_string(), "N");
  auto s = parry_spectrum(P("x^4-x^3-x^2-x+1"));
  EXPECT_TRUE(s.infinite);
  EXPECT_EQ(s.tag, NumberTag::Salem);
}

TEST(Spectrum, SmallExamples) {
  auto a = parry_spectrum(P("x^12-x^10-x^9+x^4+x^3-x-1"));
  EXPECT_EQ(a.spec, V{2});
  EXPECT_EQ(a.ord(), 2u);
  EXPECT_EQ(a.bound, 16u);
  auto b = parry_spectrum(P("x^3-5x^2-2x+5"));
  EXPECT_EQ(b.spec, (V{1, 3, 5}));
  EXPECT_EQ(b.ord(), 5u);
  auto c = parry_spectrum(P("x^3-5x^2-8x+5"));
  EXPECT_TRUE(c.spec.empty());
  EXPECT_EQ(c.ord(), 0u);
}

TEST(Spectrum, OrderThirtyWithGap) {
  auto r = parry_spectrum(P("x^14-x^13-x^12-x^8+1"));
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(r.ord(), 30u);
  EXPECT_EQ(std::count(r.spec.begin(), r.spec.end(), 3u), 0);
}

TEST(Spectrum, UnknownsWidenOrder) {
  SpectrumOptions tiny{3, 3, 0, 1};
  auto r = parry_spectrum(P("x^3-5x^2-2x+5"), tiny);
  EXPECT_FALSE(r.complete());
  EXPECT_LE(r.ord_lo, r.ord_hi);
  EXPECT_LT(r.ord_hi, *r.bound);
  clear_status_cache();
}

TEST(Spectrum, ParallelMatchesSerial) {
  SpectrumOptions par;
  par.jobs = 3;
  auto a = parry_spectrum(P("x^12-x^10-x^9+x^4+x^3-x-1"));
  clear_status_cache();
  auto b = parry_spectrum(P("x^12-x^10-x^9+x^4+x^3-x-1"), par);
  EXPECT_EQ(a.spec, b.spec);
  ASSERT_EQ(a.per_power.size(), b.per_power.size());
  for (std::size_t i = 0; i < a.per_power.size(); ++i)
    EXPECT_EQ(a.per_power[i].status.to_string(), b.per_power[i].status.to_string());
}

TEST(Division, Examples) {
  auto r = parry_spectrum(P("x^3-5x^2-2x+5"));
  auto d5 = order_division_check(r, 5);
  EXPECT_TRUE(d5.holds);
  EXPECT_EQ(d5.expected, 1u);
  EXPECT_EQ(d5.power.ord(), 1u);
  auto d1 = order_division_check(r, 1);
  EXPECT_TRUE(d1.holds);
  EXPECT_EQ(d1.power.ord(), 5u);
}

TEST(HClass, Examples) {
  EXPECT_EQ(h_class(P("x^2-x-1")).label(), "H_inf");
  auto h = h_class(P("x^12-x^10-x^9+x^4+x^3-x-1"));
  EXPECT_EQ(h.label(), "H_2");
  ASSERT_TRUE(h.parry.has_value());
  EXPECT_FALSE(*h.parry);
  EXPECT_EQ(h_class(P("x^3-5x^2-8x+5")).label(), "H_0");
  auto t = h_class(P("x^3-5x^2-2x+5"));
  EXPECT_TRUE(t.totally_real);
  EXPECT_EQ(t.label(), "H_5");
}
