#include "parry/classify.hpp"

#include <numeric>

#include "parry/errors.hpp"
#include "parry/factor.hpp"
#include "parry/power_sums.hpp"
#include "parry/real_roots.hpp"

namespace parry {

namespace {

constexpr mpfr_prec_t kEarlyExact = 512;

// Disc k of ts may meet the real segment x.
bool may_meet(const RootEnclosure& e, const Interval& x) {
  const mpfr_prec_t p = std::max(e.precision_bits(), x.precision());
  BigFloat dx(p), t(p), d2(p), r2(p);
  // dx = max(x.lo - c, c - x.hi, 0), rounded down.
  mpfr_sub(dx.get(), x.lo().get(), e.center.re.get(), MPFR_RNDD);
  mpfr_sub(t.get(), e.center.re.get(), x.hi().get(), MPFR_RNDD);
  if (mpfr_less_p(dx.get(), t.get())) mpfr_set(dx.get(), t.get(), MPFR_RNDD);
  if (mpfr_sgn(dx.get()) < 0) mpfr_set_zero(dx.get(), 1);
  mpfr_sqr(d2.get(), dx.get(), MPFR_RNDD);
  mpfr_sqr(t.get(), e.center.im.get(), MPFR_RNDD);
  mpfr_add(d2.get(), d2.get(), t.get(), MPFR_RNDD);
  mpfr_sqr(r2.get(), e.radius.get(), MPFR_RNDU);
  return mpfr_lessequal_p(d2.get(), r2.get());
}

std::vector<std::size_t> meeting(const RootSystem& ts, const Interval& x) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ts.size(); ++k)
    if (may_meet(ts[k], x)) out.push_back(k);
  return out;
}

// x and y enclose real roots of the squarefree T; decides their order exactly
// when the enclosures are narrow enough to pick out single roots of T.
std::optional<Ordering> exact_compare(const IntPolynomial& t, const Interval& x, const Interval& y) {
  RootSystem ts(t, true);
  const mpfr_prec_t target = 2 * std::max(x.precision(), y.precision());
  for (;;) {
    auto kx = meeting(ts, x);
    auto ky = meeting(ts, y);
    if (kx.size() == 1 && ky.size() == 1) {
      if (kx[0] == ky[0]) return Ordering::Equal;
      Interval a = ts[kx[0]].real_part(), b = ts[ky[0]].real_part();
      if (certainly_less(a, b)) return Ordering::Less;
      if (certainly_less(b, a)) return Ordering::Greater;
    }
    if (kx.empty() || ky.empty()) return std::nullopt;
    if (ts.precision() >= target) return std::nullopt;
    ts.refine();
  }
}

IntPolynomial squares_polynomial(const IntPolynomial& c) { return squarefree_part(resultant_power(c, 2)); }

std::optional<Ordering> numeric(const Interval& a, const Interval& b) {
  if (certainly_less(a, b)) return Ordering::Less;
  if (certainly_less(b, a)) return Ordering::Greater;
  return std::nullopt;
}

}  // namespace

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

const char* to_string(NumberTag t) {
  switch (t) {
    case NumberTag::Pisot: return "Pisot";
    case NumberTag::Salem: return "Salem";
    case NumberTag::PerronOther: return "PerronOther";
    case NumberTag::NotPerron: return "NotPerron";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// AlgebraicReal

AlgebraicReal::AlgebraicReal(std::shared_ptr<RootSystem> roots, std::size_t index)
    : roots_(std::move(roots)), index_(index) {}

AlgebraicReal AlgebraicReal::largest_real_root(const IntPolynomial& p) {
  auto rs = std::make_shared<RootSystem>(p);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < rs->size(); ++i) {
    if (!(*rs)[i].real) continue;
    if (!best || mpfr_greater_p((*rs)[i].center.re.get(), (*rs)[*best].center.re.get())) best = i;
  }
  if (!best) throw PreconditionViolated("polynomial has no real root: " + p.to_string());
  return AlgebraicReal(rs, *best);
}

AlgebraicReal AlgebraicReal::integer(long n) { return largest_real_root(IntPolynomial{-n, 1}); }

const IntPolynomial& lehmer_polynomial() {
  static const IntPolynomial l{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  return l;
}

AlgebraicReal theta0() { return AlgebraicReal::largest_real_root(IntPolynomial{-1, -1, 1}); }
AlgebraicReal rho() { return AlgebraicReal::largest_real_root(IntPolynomial{-1, -1, 0, 1}); }
AlgebraicReal tau10() { return AlgebraicReal::largest_real_root(lehmer_polynomial()); }

// ---------------------------------------------------------------------------
// Comparisons

Ordering compare_modulus(RootSystem& rs, std::size_t i, AlgebraicReal& c) {
  mpfr_prec_t last_exact = 0;
  for (;;) {
    Interval m = rs[i].modulus();
    Interval v = c.interval();
    if (auto o = numeric(m, v)) return *o;
    const mpfr_prec_t p = std::min(rs.precision(), c.precision());
    const bool at_ceiling = p >= precision_ceiling();
    if ((p >= kEarlyExact && p >= 4 * last_exact) || at_ceiling) {
      last_exact = p;
      if (rs.polynomial().is_monic() && c.polynomial().is_monic()) {
        IntPolynomial t = squarefree_part(pairwise_product_polynomial(rs.polynomial()) *
                                          squares_polynomial(c.polynomial()));
        if (auto o = exact_compare(t, sqr(m), sqr(v))) return *o;
      }
      if (at_ceiling)
        throw PrecisionExhausted("modulus comparison undecided at the precision ceiling for " +
                                 rs.polynomial().to_string());
    }
    if (rs.precision() <= c.precision()) rs.refine();
    if (c.precision() < rs.precision()) c.refine();
  }
}

Ordering compare_root_moduli(RootSystem& rs, std::size_t i, std::size_t j) {
  if (i == j || rs[i].conjugate == j) return Ordering::Equal;
  mpfr_prec_t last_exact = 0;
  std::optional<IntPolynomial> t;
  for (;;) {
    Interval a = rs[i].modulus(), b = rs[j].modulus();
    if (auto o = numeric(a, b)) return *o;
    const mpfr_prec_t p = rs.precision();
    const bool at_ceiling = p >= precision_ceiling();
    if ((p >= kEarlyExact && p >= 4 * last_exact) || at_ceiling) {
      last_exact = p;
      if (rs.polynomial().is_monic()) {
        if (!t) t = squarefree_part(pairwise_product_polynomial(rs.polynomial()));
        if (auto o = exact_compare(*t, sqr(a), sqr(b))) return *o;
      }
      if (at_ceiling)
        throw PrecisionExhausted("root modulus comparison undecided at the precision ceiling for " +
                                 rs.polynomial().to_string());
    }
    rs.refine();
  }
}

Ordering compare_real_parts(RootSystem& rs, std::size_t i, std::size_t j) {
  if (i == j || rs[i].conjugate == j) return Ordering::Equal;
  for (;;) {
    if (auto o = numeric(rs[i].real_part(), rs[j].real_part())) return *o;
    if (rs.precision() >= precision_ceiling())
      throw PrecisionExhausted("real part comparison undecided at the precision ceiling");
    rs.refine();
  }
}

// ---------------------------------------------------------------------------
// Classification

namespace {

// P(x) = Q(x^g) with g > 1 puts zeta_g * beta among the roots.
bool has_rotational_symmetry(const IntPolynomial& p) {
  unsigned long g = 0;
  for (std::size_t k = 1; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0) g = std::gcd(g, static_cast<unsigned long>(k));
  return g > 1;
}

std::size_t select_gamma(RootSystem& rs, std::size_t beta) {
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    if (j == beta) continue;
    if (!best) {
      best = j;
      continue;
    }
    Ordering c = compare_root_moduli(rs, j, *best);
    if (c == Ordering::Greater) {
      best = j;
    } else if (c == Ordering::Equal) {
      Ordering r = compare_real_parts(rs, j, *best);
      if (r == Ordering::Greater || (r == Ordering::Equal && mpfr_sgn(rs[j].center.im.get()) > 0)) best = j;
    }
  }
  return *best;
}

}  // namespace

static PerronAnalysis analyze_with(const IntPolynomial& p, bool check_irreducible, std::shared_ptr<RootSystem> roots);

PerronAnalysis analyze(const IntPolynomial& p, bool check_irreducible) { return analyze_with(p, check_irreducible, nullptr); }

PerronAnalysis analyze_power(const PerronAnalysis& a, std::size_t k) {
  if (k == 1) return a;
  const IntPolynomial q = min_poly_of_power(a.poly, k);
  std::shared_ptr<RootSystem> roots;
  if (a.roots && !a.roots->derived() && q.is_monic()) roots = std::make_shared<RootSystem>(q, *a.roots, k);
  return analyze_with(q, false, std::move(roots));
}

static PerronAnalysis analyze_with(const IntPolynomial& p, bool check_irreducible, std::shared_ptr<RootSystem> roots) {
  if (p.degree() < 1) throw PreconditionViolated("classification needs a polynomial of degree >= 1");
  PerronAnalysis a;
  a.poly = p.normalized();
  if (check_irreducible && !is_irreducible(a.poly)) {
    std::vector<std::string> names;
    for (const auto& f : factor_bounded(a.poly)) names.push_back(f.to_string());
    throw Reducible("polynomial is reducible: " + a.poly.to_string(), names);
  }
  if (!a.poly.is_monic()) return a;
  a.roots = roots ? std::move(roots) : std::make_shared<RootSystem>(a.poly, true);
  RootSystem& rs = *a.roots;

  if (a.poly.degree() == 1) {
    if (-a.poly.coeff(0) > 1) {
      a.tag = NumberTag::Pisot;
      a.beta = 0;
    }
    return a;
  }
  if (has_rotational_symmetry(a.poly)) return a;

  // Root of maximal modulus, then strict dominance.
  std::size_t m = 0;
  for (std::size_t j = 1; j < rs.size(); ++j)
    if (compare_root_moduli(rs, j, m) == Ordering::Greater) m = j;
  if (!rs[m].real) return a;
  for (std::size_t j = 0; j < rs.size(); ++j)
    if (j != m && compare_root_moduli(rs, m, j) != Ordering::Greater) return a;
  {
    AlgebraicReal one = AlgebraicReal::integer(1);
    if (mpfr_sgn(rs[m].center.re.get()) <= 0 || compare_modulus(rs, m, one) != Ordering::Greater) return a;
  }
  a.beta = m;

  if (self_reciprocal(a.poly) && a.poly.degree() >= 4) {
    bool salem = false;
    try {
      IntPolynomial q = chebyshev_reduce(a.poly);
      const unsigned half = static_cast<unsigned>(q.degree());
      salem = sturm_count(q, {mpq_class(2), std::nullopt}) == 1 &&
              sturm_count(q, {mpq_class(-2), mpq_class(2)}) == half - 1;
    } catch (const NotReciprocal&) {
      salem = false;
    }
    if (salem) {
      a.tag = NumberTag::Salem;
      return a;
    }
    a.tag = NumberTag::PerronOther;
    a.gamma = select_gamma(rs, m);
    AlgebraicReal one = AlgebraicReal::integer(1);
    if (compare_modulus(rs, *a.gamma, one) != Ordering::Greater)
      throw PreconditionViolated("reciprocal non-Salem polynomial without a conjugate outside the unit circle");
    return a;
  }

  AlgebraicReal one = AlgebraicReal::integer(1);
  bool inside = true;
  for (std::size_t j = 0; j < rs.size() && inside; ++j)
    if (j != m && compare_modulus(rs, j, one) != Ordering::Less) inside = false;
  if (inside) {
    a.tag = NumberTag::Pisot;
    return a;
  }
  a.tag = NumberTag::PerronOther;
  a.gamma = select_gamma(rs, m);
  return a;
}

NumberClass classify_number(const IntPolynomial& p) {
  PerronAnalysis a = analyze(p);
  NumberClass c;
  c.tag = a.tag;
  if (a.tag == NumberTag::PerronOther) c.witness = a.gamma_enclosure();
  return c;
}

// ---------------------------------------------------------------------------
// Mahler measure

Interval mahler_interval(const RootSystem& rs) {
  const mpfr_prec_t p = rs.precision();
  Interval m = Interval::from_integer(abs(rs.polynomial().leading()), p);
  for (const auto& e : rs.roots()) m = m * max_one(e.modulus());
  return m;
}

RationalInterval mahler_measure(const IntPolynomial& p, const mpq_class& eps) {
  if (p.is_zero()) throw PreconditionViolated("Mahler measure of the zero polynomial");
  if (eps <= 0) throw PreconditionViolated("eps must be positive");
  const mpz_class content = p.content();
  std::vector<std::pair<std::unique_ptr<RootSystem>, unsigned>> parts;
  for (auto& [s, mult] : squarefree_decomposition(p))
    parts.emplace_back(std::make_unique<RootSystem>(s, true), mult);
  for (;;) {
    mpfr_prec_t prec = 64;
    for (auto& pr : parts) prec = std::max(prec, pr.first->precision());
    Interval m = Interval::from_integer(content, prec);
    for (auto& [rs, mult] : parts) {
      Interval f = mahler_interval(*rs);
      for (unsigned k = 0; k < mult; ++k) m = m * f;
    }
    RationalInterval out{m.lo().to_rational(), m.hi().to_rational()};
    if (out.width() < eps) return out;
    for (auto& pr : parts) pr.first->refine();
  }
}

}  // namespace parry
