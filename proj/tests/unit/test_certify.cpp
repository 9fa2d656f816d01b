#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "parry/classify.hpp"
#include "parry/mpfr.hpp"
#include "parry/power_sums.hpp"
#include "parry/roots.hpp"

using namespace parry;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }

bool has_root_near(const std::vector<RootEnclosure>& rs, double re, double im, double tol) {
  return std::any_of(rs.begin(), rs.end(), [&](const RootEnclosure& r) {
    return std::abs(r.center.re.to_double() - re) < tol && std::abs(r.center.im.to_double() - im) < tol;
  });
}
}  // namespace

TEST(Interval, ArithmeticEncloses) {
  Interval two = Interval::from_integer(2, 128);
  Interval s = sqrt(two);
  EXPECT_TRUE(certainly_less(s, Interval::from_rational(mpq_class(142, 100), 128)));
  EXPECT_TRUE(certainly_less(Interval::from_rational(mpq_class(141, 100), 128), s));
  Interval sq = sqr(s);
  EXPECT_TRUE(sq.contains(2));
  Interval third = Interval::from_rational(mpq_class(1, 3), 64);
  EXPECT_TRUE((third * mpz_class(3)).contains(1));
}

TEST(Roots, IsolateQuadratic) {
  auto rs = isolate_roots(P("x^2-x-1"));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_TRUE(rs[0].real && rs[1].real);
  EXPECT_TRUE(has_root_near(rs, 1.6180339887, 0, 1e-9));
  EXPECT_TRUE(has_root_near(rs, -0.6180339887, 0, 1e-9));
}

TEST(Roots, IsolateTableExamples) {
  auto rs = isolate_roots(P("x^12-x^10-x^9+x^4+x^3-x-1"));
  ASSERT_EQ(rs.size(), 12u);
  EXPECT_TRUE(has_root_near(rs, 1.2528, 0, 1e-3));
  EXPECT_TRUE(has_root_near(rs, 0.4938, 0.9056, 1e-3));
  EXPECT_TRUE(has_root_near(rs, 0.4938, -0.9056, 1e-3));
  auto qs = isolate_roots(P("x^4-x-1"));
  EXPECT_TRUE(has_root_near(qs, 1.2207, 0, 1e-3));
  EXPECT_TRUE(has_root_near(qs, -0.2481, 1.0340, 1e-3));
}

TEST(Roots, EnclosuresAreDisjointAndShrink) {
  RootSystem rs(P("x^7-x^6-1"));
  auto before = rs[0].radius.to_double();
  rs.refine();
  EXPECT_LE(rs[0].radius.to_double(), before);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      double dx = rs[i].center.re.to_double() - rs[j].center.re.to_double();
      double dy = rs[i].center.im.to_double() - rs[j].center.im.to_double();
      EXPECT_GT(std::hypot(dx, dy), rs[i].radius.to_double() + rs[j].radius.to_double());
    }
}

TEST(Roots, PowerSystemMatchesDirectIsolation) {
  for (const char* ps : {"x^12-x^10-x^9+x^4+x^3-x-1", "x^3-5x^2-2x+5", "x^10-x-1"}) {
    const IntPolynomial p = P(ps);
    RootSystem base(p, true);
    for (std::size_t k : {2u, 5u, 11u}) {
      const IntPolynomial q = min_poly_of_power(p, k);
      RootSystem derived(q, base, k);
      const auto direct = isolate_roots(q);
      ASSERT_EQ(derived.size(), direct.size());
      for (const auto& d : direct) {
        const double tol = 1e-9 * std::max(1.0, std::abs(d.center.re.to_double()));
        EXPECT_TRUE(has_root_near(derived.roots(), d.center.re.to_double(), d.center.im.to_double(), tol))
            << ps << " k=" << k;
      }
      for (std::size_t i = 0; i < derived.size(); ++i) {
        EXPECT_EQ(derived[derived[i].conjugate].conjugate, i);
        // every disc holds a root of q: evaluation over the disc box contains zero
        const CBox v = evaluate(q.coeffs(), derived[i].box());
        EXPECT_TRUE(v.re.contains_zero() && v.im.contains_zero()) << ps << " k=" << k;
      }
      const BigFloat before = derived[0].radius;
      derived.refine();
      EXPECT_TRUE(mpfr_lessequal_p(derived[0].radius.get(), before.get()));
    }
  }
}

TEST(Classify, CompareModulus) {
  {
    PerronAnalysis a = analyze(P("x^3-5x^2-8x+5"));
    ASSERT_TRUE(a.gamma);
    AlgebraicReal th = theta0();
    EXPECT_EQ(compare_modulus(*a.roots, *a.gamma, th), Ordering::Greater);
  }
  {
    PerronAnalysis a = analyze(P("x^12-x^10-x^9+x^4+x^3-x-1"));
    AlgebraicReal th = theta0();
    EXPECT_EQ(compare_modulus(*a.roots, *a.gamma, th), Ordering::Less);
  }
  {
    auto rs = std::make_shared<RootSystem>(P("x^2-x-1"));
    std::size_t phi = rs->roots()[0].center.re.to_double() > 0 ? 0 : 1;
    AlgebraicReal th = theta0();
    EXPECT_EQ(compare_modulus(*rs, phi, th), Ordering::Equal);
  }
}

TEST(Classify, NumberClasses) {
  EXPECT_EQ(classify_number(P("x^2-x-1")).tag, NumberTag::Pisot);
  EXPECT_EQ(classify_number(lehmer_polynomial()).tag, NumberTag::Salem);
  auto c = classify_number(P("x^4-x-1"));
  EXPECT_EQ(c.tag, NumberTag::PerronOther);
  EXPECT_TRUE(c.witness.has_value());
  EXPECT_EQ(classify_number(P("x^2+1")).tag, NumberTag::NotPerron);
  EXPECT_EQ(classify_number(P("x^3-x-1")).tag, NumberTag::Pisot);
}

TEST(Classify, SalemTieBreakWithUnitCircle) {
  // Salem number of degree 4: x^4 - x^3 - x^2 - x + 1.
  EXPECT_EQ(classify_number(P("x^4-x^3-x^2-x+1")).tag, NumberTag::Salem);
}

TEST(Classify, MahlerMeasure) {
  const mpq_class eps(1, 1000000);
  auto m = mahler_measure(P("x^2-x-1"), eps);
  EXPECT_LT(m.width(), eps);
  EXPECT_LT(m.lo.get_d(), 1.6180339888);
  EXPECT_GT(m.hi.get_d(), 1.6180339887);

  auto l = mahler_measure(lehmer_polynomial(), eps);
  EXPECT_NEAR(l.lo.get_d(), 1.17628081826, 1e-6);

  // x^4-x-1: beta times the squared modulus of the complex pair.
  auto rs = isolate_roots(P("x^4-x-1"));
  double expect = 1;
  for (const auto& r : rs) expect *= std::max(1.0, std::hypot(r.center.re.to_double(), r.center.im.to_double()));
  auto q = mahler_measure(P("x^4-x-1"), eps);
  EXPECT_NEAR(q.lo.get_d(), expect, 1e-6);
}
