#include "parry/roots.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "parry/errors.hpp"

namespace parry {

namespace {

std::atomic<mpfr_prec_t> g_ceiling{16384};

constexpr mpfr_prec_t kHardMax = mpfr_prec_t(1) << 24;

Interval point(const BigFloat& x) { return Interval(x, x); }

CBox point(const CFloat& z) { return CBox(point(z.re), point(z.im)); }

// Fujiwara bound on the root moduli, computed in log space.
double root_bound(const IntPolynomial& p) {
  const long n = p.degree();
  const auto& a = p.coeffs();
  long e_lead = 0;
  double m_lead = mpz_get_d_2exp(&e_lead, a[n].get_mpz_t());
  double lead_log = std::log2(std::fabs(m_lead)) + static_cast<double>(e_lead);
  double best = -1e300;
  for (long k = 1; k <= n; ++k) {
    const mpz_class& c = a[n - k];
    if (c == 0) continue;
    long e = 0;
    double m = mpz_get_d_2exp(&e, c.get_mpz_t());
    double lg = std::log2(std::fabs(m)) + static_cast<double>(e) - lead_log;
    if (k == n) lg -= 1.0;
    best = std::max(best, lg / static_cast<double>(k));
  }
  if (best < -1e299) return 1.0;
  return std::exp2(best + 1.0);
}

std::vector<std::complex<double>> circle_guesses(const IntPolynomial& p) {
  const long n = p.degree();
  double r = root_bound(p);
  if (!std::isfinite(r) || r > 1e300) r = 1e300;
  std::vector<std::complex<double>> z(n);
  for (long k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z[k] = std::polar(r * 0.5, t);
  }
  return z;
}

// Quick double-precision Aberth pass; only used to seed the certified phase.
std::vector<std::complex<double>> double_aberth(const IntPolynomial& p, std::vector<std::complex<double>> z) {
  const long n = p.degree();
  std::vector<double> a(n + 1);
  for (long k = 0; k <= n; ++k) {
    if (mpz_sizeinbase(p.coeffs()[k].get_mpz_t(), 2) > 900) return z;
    a[k] = p.coeffs()[k].get_d();
  }
  for (int it = 0; it < 500; ++it) {
    double worst = 0;
    for (long i = 0; i < n; ++i) {
      std::complex<double> pv = a[n], dv = 0;
      for (long k = n - 1; k >= 0; --k) {
        dv = dv * z[i] + pv;
        pv = pv * z[i] + a[k];
      }
      if (pv == 0.0) continue;
      std::complex<double> ratio = pv / dv;
      std::complex<double> s = 0;
      for (long j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      std::complex<double> w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  for (auto& v : z)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return circle_guesses(p);
  return z;
}

mpfr_exp_t exponent_of(const CFloat& z) {
  mpfr_exp_t e = mpfr_zero_p(z.re.get()) ? mpfr_exp_t(-1000000000) : mpfr_get_exp(z.re.get());
  if (!mpfr_zero_p(z.im.get())) e = std::max(e, mpfr_get_exp(z.im.get()));
  return e;
}

// True when the closed discs D(a, ra) and D(b, rb) are certainly disjoint.
bool disjoint(const BigFloat& are, const BigFloat& aim, const BigFloat& ra, const BigFloat& bre,
              const BigFloat& bim, const BigFloat& rb) {
  const mpfr_prec_t p = std::max({are.precision(), bre.precision(), ra.precision(), rb.precision()});
  Interval dre = point(are) - point(bre);
  Interval dim = point(aim) - point(bim);
  Interval d2 = sqr(dre) + sqr(dim);
  BigFloat s(p);
  mpfr_add(s.get(), ra.get(), rb.get(), MPFR_RNDU);
  mpfr_sqr(s.get(), s.get(), MPFR_RNDU);
  return mpfr_greater_p(d2.lo().get(), s.get());
}

// Disc b lies inside disc a.
bool contained(const RootEnclosure& inner, const RootEnclosure& outer) {
  Interval dre = point(inner.center.re) - point(outer.center.re);
  Interval dim = point(inner.center.im) - point(outer.center.im);
  Interval d = sqrt(sqr(dre) + sqr(dim));
  BigFloat s(d.precision());
  mpfr_add(s.get(), d.hi().get(), inner.radius.get(), MPFR_RNDU);
  return mpfr_lessequal_p(s.get(), outer.radius.get());
}

}  // namespace

mpfr_prec_t precision_ceiling() { return g_ceiling.load(); }
void set_precision_ceiling(mpfr_prec_t bits) { g_ceiling.store(std::max<mpfr_prec_t>(bits, 64)); }

// ---------------------------------------------------------------------------
// RootEnclosure

CBox RootEnclosure::box() const { return CBox(real_part(), imag_part()); }

Interval RootEnclosure::real_part() const { return Interval::around(center.re, radius, precision_bits()); }

Interval RootEnclosure::imag_part() const {
  if (real) return Interval(precision_bits());
  return Interval::around(center.im, radius, precision_bits());
}

Interval RootEnclosure::modulus() const {
  if (real) return abs(real_part());
  Interval m = parry::modulus(point(center));
  mpfr_sub(m.lo().get(), m.lo().get(), radius.get(), MPFR_RNDD);
  if (mpfr_sgn(m.lo().get()) < 0) mpfr_set_zero(m.lo().get(), 1);
  mpfr_add(m.hi().get(), m.hi().get(), radius.get(), MPFR_RNDU);
  return m;
}

std::string RootEnclosure::to_string(int digits) const {
  auto fmt = [digits](const BigFloat& x) {
    char* buf = nullptr;
    std::string f = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, f.c_str(), x.get());
    std::string s(buf);
    mpfr_free_str(buf);
    if (s.rfind("0.", 0) == 0) s.erase(0, 1);
    if (s.rfind("-0.", 0) == 0) s.erase(1, 1);
    return s;
  };
  std::string s = fmt(center.re);
  if (real) return s;
  std::string im = fmt(center.im);
  if (im[0] != '-') im = "+" + im;
  return s + im + "i";
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(const IntPolynomial& p, bool known_squarefree,
                       const std::vector<std::complex<double>>& guesses) {
  if (p.is_zero()) throw PreconditionViolated("cannot isolate the roots of the zero polynomial");
  poly_ = known_squarefree ? p : squarefree_part(p);
  initial_isolation(guesses);
}

std::vector<std::complex<double>> RootSystem::approximations() const {
  std::vector<std::complex<double>> out;
  out.reserve(z_.size());
  for (const auto& z : z_) out.emplace_back(z.re.to_double(), z.im.to_double());
  return out;
}

bool RootSystem::aberth(mpfr_prec_t prec, int max_iter) {
  const long n = poly_.degree();
  std::vector<BigFloat> a;
  a.reserve(n + 1);
  for (const auto& c : poly_.coeffs()) a.emplace_back(c, prec);
  CFloat pv(prec), dv(prec), t(prec), ratio(prec), s(prec), diff(prec), inv(prec), w(prec);
  CFloat one(prec);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  for (int it = 0; it < max_iter; ++it) {
    bool done = true;
    for (long i = 0; i < n; ++i) {
      CFloat& zi = z_[i];
      mpfr_set(pv.re.get(), a[n].get(), MPFR_RNDN);
      mpfr_set_zero(pv.im.get(), 1);
      mpfr_set_zero(dv.re.get(), 1);
      mpfr_set_zero(dv.im.get(), 1);
      for (long k = n - 1; k >= 0; --k) {
        cmul(t, dv, zi);
        cadd(dv, t, pv);
        cmul(t, pv, zi);
        mpfr_add(pv.re.get(), t.re.get(), a[k].get(), MPFR_RNDN);
        mpfr_set(pv.im.get(), t.im.get(), MPFR_RNDN);
      }
      if (pv.re.is_zero() && pv.im.is_zero()) continue;
      if (dv.re.is_zero() && dv.im.is_zero()) {
        // Stationary point: nudge off it.
        mpfr_nextabove(zi.re.get());
        mpfr_nextabove(zi.im.get());
        done = false;
        continue;
      }
      cdiv(ratio, pv, dv);
      mpfr_set_zero(s.re.get(), 1);
      mpfr_set_zero(s.im.get(), 1);
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        csub(diff, zi, z_[j]);
        if (diff.re.is_zero() && diff.im.is_zero()) continue;
        cdiv(inv, one, diff);
        cadd(s, s, inv);
      }
      cmul(t, ratio, s);
      csub(t, one, t);
      if (t.re.is_zero() && t.im.is_zero()) continue;
      cdiv(w, ratio, t);
      if (!mpfr_number_p(w.re.get()) || !mpfr_number_p(w.im.get())) continue;
      csub(zi, zi, w);
      if (w.re.is_zero() && w.im.is_zero()) continue;
      mpfr_exp_t ze = std::max<mpfr_exp_t>(exponent_of(zi), 1);
      if (exponent_of(w) - ze > -(static_cast<mpfr_exp_t>(prec) - 8)) done = false;
    }
    if (done) return true;
  }
  return false;
}

bool RootSystem::certify(std::vector<RootEnclosure>& out) const {
  const long n = poly_.degree();
  const mpfr_prec_t prec = z_.empty() ? prec_ : z_[0].precision();
  std::vector<Interval> a;
  a.reserve(n + 1);
  for (const auto& c : poly_.coeffs()) a.push_back(Interval::from_integer(c, prec));
  out.clear();
  out.resize(n);
  for (long i = 0; i < n; ++i) {
    CBox zi = point(z_[i]);
    CBox pz(a[n], Interval(prec));
    for (long k = n - 1; k >= 0; --k) {
      pz = pz * zi;
      pz.re = pz.re + a[k];
    }
    CBox den(a[n], Interval(prec));
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      den = den * (zi - point(z_[j]));
    }
    Interval dm = modulus(den);
    if (mpfr_sgn(dm.lo().get()) <= 0) return false;
    Interval pm = modulus(pz);
    BigFloat r(prec);
    mpfr_div(r.get(), pm.hi().get(), dm.lo().get(), MPFR_RNDU);
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(2 * n), MPFR_RNDU);
    if (!mpfr_number_p(r.get())) return false;
    out[i].center = z_[i];
    out[i].radius = r;
  }
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      if (!disjoint(out[i].center.re, out[i].center.im, out[i].radius, out[j].center.re, out[j].center.im,
                    out[j].radius))
        return false;
  for (long i = 0; i < n; ++i) {
    RootEnclosure& e = out[i];
    BigFloat neg_im(prec);
    mpfr_neg(neg_im.get(), e.center.im.get(), MPFR_RNDN);
    bool off_axis = mpfr_cmpabs(e.center.im.get(), e.radius.get()) > 0;
    long partner = -1;
    int hits = 0;
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!disjoint(e.center.re, neg_im, e.radius, out[j].center.re, out[j].center.im, out[j].radius)) {
        partner = j;
        ++hits;
      }
    }
    if (off_axis) {
      if (hits != 1) return false;
      e.real = false;
      e.conjugate = static_cast<std::size_t>(partner);
    } else {
      if (hits != 0) return false;
      e.real = true;
      e.conjugate = static_cast<std::size_t>(i);
    }
  }
  for (long i = 0; i < n; ++i)
    if (out[out[i].conjugate].conjugate != static_cast<std::size_t>(i)) return false;
  return true;
}

void RootSystem::initial_isolation(const std::vector<std::complex<double>>& guesses) {
  const long n = poly_.degree();
  if (n <= 0) return;
  std::vector<std::complex<double>> g =
      static_cast<long>(guesses.size()) == n ? guesses : double_aberth(poly_, circle_guesses(poly_));
  mpfr_prec_t p = 64;
  z_.clear();
  for (const auto& v : g) z_.emplace_back(BigFloat(v.real(), p), BigFloat(v.imag(), p));
  std::vector<RootEnclosure> fresh;
  for (;;) {
    aberth(p, 100 + 5 * static_cast<int>(n));
    if (certify(fresh)) break;
    p *= 2;
    if (p > kHardMax) throw PrecisionExhausted("root isolation did not converge");
    for (auto& z : z_) z.round_to(p);
  }
  prec_ = p;
  for (long i = 0; i < n; ++i)
    if (fresh[i].real) mpfr_set_zero(z_[i].im.get(), 1);
  adopt(std::move(fresh));
}

// Stores fresh enclosures (indexed like z_) ordered by descending modulus
// upper bound.
void RootSystem::adopt(std::vector<RootEnclosure> fresh) {
  const long n = static_cast<long>(fresh.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<BigFloat> ub;
  for (const auto& e : fresh) ub.push_back(e.modulus().hi());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    int c = mpfr_cmp(ub[x].get(), ub[y].get());
    if (c != 0) return c > 0;
    return mpfr_cmp(fresh[x].center.im.get(), fresh[y].center.im.get()) > 0;
  });
  std::vector<std::size_t> where(n);
  for (long i = 0; i < n; ++i) where[order[i]] = static_cast<std::size_t>(i);
  std::vector<CFloat> z2;
  roots_.clear();
  for (long i = 0; i < n; ++i) {
    z2.push_back(z_[order[i]]);
    roots_.push_back(fresh[order[i]]);
    roots_.back().conjugate = where[fresh[order[i]].conjugate];
  }
  z_ = std::move(z2);
  if (base_) {
    std::vector<std::size_t> fb(n);
    for (long i = 0; i < n; ++i) fb[i] = from_base_.empty() ? order[i] : from_base_[order[i]];
    from_base_ = std::move(fb);
  }
}

RootSystem::RootSystem(const IntPolynomial& power_poly, const RootSystem& base, std::size_t k)
    : poly_(power_poly), base_(std::make_shared<RootSystem>(base)), power_(k) {
  if (power_poly.degree() != base.polynomial().degree() || k == 0)
    throw PreconditionViolated("power root system needs a degree-preserving power");
  if (base_->base_) throw PreconditionViolated("power root system needs a directly isolated base");
  std::vector<RootEnclosure> fresh;
  while (!derive(fresh)) {
    if (base_->precision() >= kHardMax) throw PrecisionExhausted("power roots did not separate");
    base_->refine();
  }
  prec_ = base_->precision();
  z_.clear();
  for (const auto& e : fresh) z_.push_back(e.center);
  from_base_.clear();
  adopt(std::move(fresh));
}

// Enclosures in base order; false when two of them overlap.
bool RootSystem::derive(std::vector<RootEnclosure>& out) const {
  const std::size_t n = base_->size();
  const mpfr_prec_t p = base_->precision();
  out.clear();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RootEnclosure& b = (*base_)[i];
    CBox acc(Interval::from_integer(1, p), Interval(p));
    CBox sq = b.box();
    if (b.real) sq.im = Interval(p);
    for (std::size_t e = power_; e; e >>= 1) {
      if (e & 1) acc = acc * sq;
      if (e > 1) sq = sq * sq;
    }
    RootEnclosure& r = out[i];
    r.center = CFloat(acc.re.mid(), acc.im.mid());
    BigFloat hr(p), hi(p), rad(p);
    mpfr_sub(hr.get(), acc.re.hi().get(), r.center.re.get(), MPFR_RNDU);
    mpfr_sub(rad.get(), r.center.re.get(), acc.re.lo().get(), MPFR_RNDU);
    if (mpfr_less_p(hr.get(), rad.get())) mpfr_set(hr.get(), rad.get(), MPFR_RNDU);
    mpfr_sub(hi.get(), acc.im.hi().get(), r.center.im.get(), MPFR_RNDU);
    mpfr_sub(rad.get(), r.center.im.get(), acc.im.lo().get(), MPFR_RNDU);
    if (mpfr_less_p(hi.get(), rad.get())) mpfr_set(hi.get(), rad.get(), MPFR_RNDU);
    mpfr_hypot(rad.get(), hr.get(), hi.get(), MPFR_RNDU);
    r.radius = rad;
    r.real = b.real;
    r.conjugate = b.conjugate;
    if (r.real) mpfr_set_zero(r.center.im.get(), 1);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!disjoint(out[i].center.re, out[i].center.im, out[i].radius, out[j].center.re, out[j].center.im,
                    out[j].radius))
        return false;
  return true;
}

void RootSystem::refine() {
  const long n = poly_.degree();
  if (base_) {
    std::vector<RootEnclosure> fresh;
    do {
      if (base_->precision() >= kHardMax) throw PrecisionExhausted("root refinement exceeded the hard precision limit");
      base_->refine();
    } while (!derive(fresh));
    for (long i = 0; i < n; ++i) {
      RootEnclosure& e = fresh[from_base_[i]];
      e.conjugate = roots_[i].conjugate;
      z_[i] = e.center;
      if (contained(e, roots_[i])) roots_[i] = std::move(e);
    }
    prec_ = base_->precision();
    return;
  }
  if (n <= 0) {
    prec_ *= 2;
    return;
  }
  mpfr_prec_t p = prec_ * 2;
  std::vector<RootEnclosure> fresh;
  for (;;) {
    if (p > kHardMax) throw PrecisionExhausted("root refinement exceeded the hard precision limit");
    for (auto& z : z_) z.round_to(p);
    aberth(p, 40 + static_cast<int>(n));
    bool ok = certify(fresh);
    if (ok) {
      // Root identity: each new disc must avoid every other old disc.
      for (long i = 0; ok && i < n; ++i) {
        if (fresh[i].real != roots_[i].real || fresh[i].conjugate != roots_[i].conjugate) ok = false;
        for (long j = 0; ok && j < n; ++j)
          if (j != i && !disjoint(fresh[i].center.re, fresh[i].center.im, fresh[i].radius, roots_[j].center.re,
                                  roots_[j].center.im, roots_[j].radius))
            ok = false;
      }
    }
    if (ok) break;
    p *= 2;
  }
  for (long i = 0; i < n; ++i) {
    if (fresh[i].real) mpfr_set_zero(z_[i].im.get(), 1);
    if (contained(fresh[i], roots_[i])) roots_[i] = std::move(fresh[i]);
  }
  prec_ = p;
}

void RootSystem::refine_to(mpfr_prec_t bits) {
  while (prec_ < bits) refine();
}

std::vector<RootEnclosure> isolate_roots(const IntPolynomial& p) { return RootSystem(p).roots(); }

// ---------------------------------------------------------------------------
// Evaluation

Interval evaluate(const std::vector<mpz_class>& c, const Interval& x) {
  const mpfr_prec_t p = x.precision();
  if (c.empty()) return Interval(p);
  Interval acc = Interval::from_integer(c.back(), p);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * x;
    if (c[k] != 0) acc = acc + c[k];
  }
  return acc;
}

Interval evaluate(const std::vector<mpq_class>& c, const Interval& x) {
  const mpfr_prec_t p = x.precision();
  if (c.empty()) return Interval(p);
  Interval acc = Interval::from_rational(c.back(), p);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * x;
    if (c[k] != 0) acc = acc + Interval::from_rational(c[k], p);
  }
  return acc;
}

CBox evaluate(const std::vector<mpz_class>& c, const CBox& z) {
  const mpfr_prec_t p = z.re.precision();
  if (c.empty()) return CBox(p);
  CBox acc(Interval::from_integer(c.back(), p), Interval(p));
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * z;
    if (c[k] != 0) acc.re = acc.re + c[k];
  }
  return acc;
}

CBox evaluate(const std::vector<mpq_class>& c, const CBox& z) {
  const mpfr_prec_t p = z.re.precision();
  if (c.empty()) return CBox(p);
  CBox acc(Interval::from_rational(c.back(), p), Interval(p));
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * z;
    if (c[k] != 0) acc.re = acc.re + Interval::from_rational(c[k], p);
  }
  return acc;
}

}  // namespace parry
