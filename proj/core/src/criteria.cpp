#include "parry/criteria.hpp"

#include <stdexcept>

#include "parry/errors.hpp"
#include "parry/power_sums.hpp"

namespace parry {

namespace {

void require_perron(const PerronAnalysis& a) {
  if (a.tag == NumberTag::NotPerron) throw NotPerron("not a Perron polynomial: " + a.poly.to_string());
}

void require_other(const PerronAnalysis& a, const char* what) {
  require_perron(a);
  if (a.tag != NumberTag::PerronOther || !a.gamma)
    throw PreconditionViolated(std::string(what) + " needs a Perron number that is neither Pisot nor Salem");
}

mpz_class ceil_of(const BigFloat& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDU);
  return z;
}

mpz_class floor_of_float(const BigFloat& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDD);
  return z;
}

// |gamma|^m against the golden ratio, exactly.
Ordering power_against_theta0(const PerronAnalysis& a, std::size_t m) {
  PerronAnalysis q = analyze_power(a, m);
  if (!q.gamma) throw std::logic_error("power polynomial lost its dominant conjugate");
  AlgebraicReal th = theta0();
  return compare_modulus(*q.roots, *q.gamma, th);
}

}  // namespace

ParryStatus CriterionVerdict::status() const {
  ParryStatus s;
  s.kind = StatusKind::NonParry;
  s.criterion = criterion;
  s.conjugate = conjugate;
  if (index) s.akiyama_index = *index;
  if (tail) s.tail = *tail;
  return s;
}

CriterionVerdict solomyak_test(const PerronAnalysis& a) {
  require_perron(a);
  CriterionVerdict v;
  v.criterion = Criterion::Solomyak;
  if (!a.gamma) return v;
  AlgebraicReal th = theta0();
  if (compare_modulus(*a.roots, *a.gamma, th) == Ordering::Greater) {
    v.outcome = Outcome::NonParry;
    v.conjugate = a.gamma_enclosure().to_string();
  }
  return v;
}

CriterionVerdict boyd_test(const PerronAnalysis& a) {
  require_perron(a);
  CriterionVerdict v;
  v.criterion = Criterion::Boyd;
  const mpz_class tail = abs(a.poly.coeff(0));
  if (a.poly.degree() <= 1) return v;  // beta = |P(0)|
  RootSystem& rs = *a.roots;
  for (;;) {
    Interval b = rs[a.beta].real_part();
    if (certainly_less(b, tail)) {
      v.outcome = Outcome::NonParry;
      v.tail = tail;
      return v;
    }
    if (certainly_greater(b, tail)) return v;
    rs.refine();  // beta is irrational, so this separates
  }
}

CriterionVerdict akiyama_test(const PerronAnalysis& a, std::size_t budget) {
  require_other(a, "the Akiyama test");
  CriterionVerdict v;
  v.criterion = Criterion::Akiyama;
  SystemRoot beta(a.roots, a.beta);
  AkiyamaScan scan{a.roots, *a.gamma, budget};
  OrbitOutcome o = run_orbit(a.poly, beta, budget, &scan, false);
  if (o.status.kind == StatusKind::NonParry) {
    v.outcome = Outcome::NonParry;
    v.index = o.status.akiyama_index;
    v.conjugate = o.status.conjugate;
  } else if (o.status.is_parry()) {
    v.orbit = o.status.kind;
  }
  return v;
}

CriterionVerdict solomyak_test(const IntPolynomial& p) { return solomyak_test(analyze(p)); }
CriterionVerdict boyd_test(const IntPolynomial& p) { return boyd_test(analyze(p)); }
CriterionVerdict akiyama_test(const IntPolynomial& p, std::size_t budget) { return akiyama_test(analyze(p), budget); }

std::size_t k_bound(const PerronAnalysis& a) {
  require_other(a, "K(beta)");
  RootSystem& rs = *a.roots;
  AlgebraicReal th = theta0();
  for (;;) {
    while (th.precision() < rs.precision()) th.refine();
    Interval g = rs[*a.gamma].modulus();
    if (mpfr_cmp_ui(g.lo().get(), 1) > 0) {
      Interval l = log(th.interval()) / log(g);
      const mpz_class lo = ceil_of(l.lo());
      const mpz_class hi = floor_of_float(l.hi());
      if (lo > hi) return lo.get_ui();
      if (lo == hi && (rs.precision() >= 256 || rs.precision() >= precision_ceiling())) {
        const std::size_t m = lo.get_ui();
        return power_against_theta0(a, m) == Ordering::Greater ? m : m + 1;
      }
      if (rs.precision() >= precision_ceiling()) return hi.get_ui() + 1;
    }
    rs.refine();
  }
}

std::size_t k_bound(const IntPolynomial& p) { return k_bound(analyze(p)); }

OrderBound np_bound(const PerronAnalysis& a) {
  require_other(a, "the Mahler bound");
  RootSystem& rs = *a.roots;
  AlgebraicReal th = theta0();
  const mpz_class d = a.poly.degree();
  for (;;) {
    while (th.precision() < rs.precision()) th.refine();
    Interval den = log(mahler_interval(rs)) - log(rs[a.beta].real_part());
    if (den.positive()) {
      Interval v = log(th.interval()) * d / den;
      BigFloat w = v.width();
      const bool tight = rs.precision() >= precision_ceiling() || mpfr_get_d(w.get(), MPFR_RNDU) < 1e-12 * (1 + v.mid().to_double());
      if (tight) {
        OrderBound out{v, v.hi().to_rational(), false};
        out.non_parry = mpfr_cmp_ui(v.hi().get(), 1) < 0;
        return out;
      }
    }
    if (rs.precision() >= precision_ceiling()) throw PrecisionExhausted("Mahler bound did not separate at the precision ceiling");
    rs.refine();
  }
}

OrderBound np_bound(const IntPolynomial& p) { return np_bound(analyze(p)); }

}  // namespace parry
