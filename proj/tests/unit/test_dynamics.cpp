#include <gtest/gtest.h>

#include <random>

#include "parry/errors.hpp"
#include "parry/expansion.hpp"
#include "parry/field.hpp"
#include "parry/orbit.hpp"
#include "parry/power_sums.hpp"

using namespace parry;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }
DigitString D(const char* s) { return parse_digits(s); }
}  // namespace

TEST(Floor, OfGeneratorAndIntegers) {
  {
    PerronAnalysis a = analyze(P("x^2-x-1"));
    SystemRoot beta(a.roots, a.beta);
    EXPECT_EQ(floor_of(FieldElement::generator(make_field(a.poly)), beta), 1);
  }
  {
    PerronAnalysis a = analyze(P("x^3-5x^2-2x+5"));
    SystemRoot beta(a.roots, a.beta);
    auto F = make_field(a.poly);
    EXPECT_EQ(floor_of(FieldElement::generator(F), beta), 5);
    EXPECT_EQ(floor_of(FieldElement::integer(F, 3), beta), 3);
  }
}

TEST(Orbit, GreedyExpansionExamples) {
  EXPECT_EQ(greedy_expansion(P("x^2-x-1")).status.to_string(), "SimpleParry 1 1");
  auto o = greedy_expansion(P("x^3-5x^2-2x+5"));
  EXPECT_EQ(o.status.kind, StatusKind::Parry);
  EXPECT_EQ(o.status.digits, D("5 (1 0)^w"));
  EXPECT_EQ(greedy_expansion(P("x^6-x^5-1")).status.digits, D("1 0 0 0 0 1"));
  auto sq = greedy_expansion(min_poly_of_power(P("x^12-x^10-x^9+x^4+x^3-x-1"), 2));
  EXPECT_EQ(sq.status.digits, D("1 0 1 (0 0 1 0 1 0 0 1 0 1 0 0)^w"));
}

TEST(Orbit, RecordInvariants) {
  auto o = greedy_expansion(P("x^3-5x^2-2x+5"));
  const auto& rec = o.record;
  ASSERT_TRUE(rec.cycle_start);
  PerronAnalysis a = analyze(P("x^3-5x^2-2x+5"));
  SystemRoot beta(a.roots, a.beta);
  for (std::size_t k = 1; k < rec.states.size(); ++k) {
    FieldElement prev = rec.state(k - 1);
    FieldElement bx = prev * FieldElement::generator(rec.field);
    EXPECT_EQ(floor_of(bx, beta), rec.digits[k - 1]);
    EXPECT_EQ(floor_of(rec.state(k), beta), 0);   // every non-seed state lies in [0, 1)
  }
  for (std::size_t i = 0; i < rec.states.size(); ++i)
    for (std::size_t j = i + 1; j < rec.states.size(); ++j) EXPECT_NE(rec.states[i], rec.states[j]);
}

TEST(Orbit, BudgetExhaustionIsUnknown) {
  auto o = greedy_expansion(P("x^4-x-1"), 20);
  EXPECT_EQ(o.status.kind, StatusKind::Unknown);
}

TEST(Companion, Examples) {
  EXPECT_EQ(companion_polynomial(D("1 1")), P("x^2-x-1"));
  for (int d = 3; d <= 9; ++d) {
    Digits ds(static_cast<std::size_t>(d), 0);
    ds.front() = 1;
    ds.back() = 1;
    IntPolynomial expect = IntPolynomial::monomial(static_cast<std::size_t>(d)) -
                           IntPolynomial::monomial(static_cast<std::size_t>(d - 1)) - IntPolynomial({1});
    EXPECT_EQ(companion_polynomial(DigitString::finite(ds)), expect);
  }
  EXPECT_TRUE(divides(P("x^3-5x^2-2x+5"), companion_polynomial(D("5 (1 0)^w"))));
  EXPECT_THROW(companion_polynomial(DigitString()), EmptyDigits);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(check_self_admissible(D("1 1")));
  EXPECT_FALSE(check_self_admissible(D("1 2")));
  EXPECT_TRUE(check_self_admissible(D("1 0 1 (0 0 1 0 1 0 0 1 0 1 0 0)^w")));
  EXPECT_FALSE(check_self_admissible(D("(2 0)^w")));   // shift by the full period equals the sequence
  EXPECT_TRUE(check_self_admissible(D("2 1")));
  EXPECT_FALSE(check_self_admissible(D("1 1 1 (1)^w")));
}

TEST(FromBeta, Examples) {
  auto g = beta_from_expansion(D("1 1"));
  EXPECT_EQ(g.polynomial, P("x^2-x-1"));
  EXPECT_TRUE(g.minimal);
  EXPECT_NEAR(g.beta.interval().mid().to_double(), 1.6180339887, 1e-9);
  auto c = beta_from_expansion(D("5((1)(0))^w"));
  EXPECT_EQ(c.polynomial, P("x^3-5x^2-2x+5"));
  // a ((b-1)(a-c))^w with (a,b,c) = (4,2,2)
  auto r = beta_from_expansion(D("4 (1 2)^w"));
  EXPECT_EQ(r.polynomial, P("x^3-4x^2-2x+2"));
  auto rt = round_trip(r, 1000);
  EXPECT_EQ(rt.status.digits, D("4 (1 2)^w"));
  EXPECT_THROW(beta_from_expansion(D("1 2")), NotAdmissible);
}

TEST(Witness, SpecExamples) {
  struct Case {
    mpq_class r, eps;
  };
  const Case cases[] = {{2, mpq_class(1, 10)}, {mpq_class(1618034, 1000000), mpq_class(1, 100)}, {mpq_class(3, 2), mpq_class(1, 4)}};
  for (const auto& c : cases) {
    DensityWitness w = density_witness(c.r, c.eps);
    EXPECT_FALSE(w.root.digits.is_finite());
    const Interval b = w.root.beta.interval();
    EXPECT_LT(abs(b.hi().to_rational() - c.r), c.eps);
    EXPECT_LT(abs(b.lo().to_rational() - c.r), c.eps);
    EXPECT_TRUE(check_self_admissible(w.root.digits));
    EXPECT_EQ(round_trip(w.root, 100000).status.digits, w.root.digits);
  }
}

TEST(Witness, QuasiGreedyDigitsOfIntegerBase) {
  // Quasi-greedy expansion of 1 in base 2 is 1^w.
  EXPECT_EQ(quasi_greedy_digits(2, 5), (Digits{1, 1, 1, 1, 1}));
  // base 3/2: greedy 1 0 1 0 0 0 0 0 1 ...
  Digits d = quasi_greedy_digits(mpq_class(3, 2), 3);
  EXPECT_EQ(d, (Digits{1, 0, 1}));
}
