#include "parry/mpfr.hpp"

#include <algorithm>
#include <sstream>

namespace parry {

namespace {

mpfr_prec_t prec_of(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

// ---------------------------------------------------------------------------
// BigFloat

mpq_class BigFloat::to_rational() const {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return q;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---------------------------------------------------------------------------
// Interval

Interval Interval::from_integer(const mpz_class& z, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::around(const BigFloat& center, const BigFloat& radius, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_sub(r.lo_.get(), center.get(), radius.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), center.get(), radius.get(), MPFR_RNDU);
  return r;
}

bool Interval::contains(const mpz_class& z) const {
  return mpfr_cmp_z(lo_.get(), z.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_.get(), z.get_mpz_t()) >= 0;
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat Interval::mid() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mpfr_add(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mpfr_sub(r.lo().get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(r.hi().get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo().get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = prec_of(a, b);
  Interval r(p);
  BigFloat t(p);
  const mpfr_srcptr al = a.lo().get(), ah = a.hi().get(), bl = b.lo().get(), bh = b.hi().get();
  mpfr_srcptr pairs[4][2] = {{al, bl}, {al, bh}, {ah, bl}, {ah, bh}};
  mpfr_mul(r.lo().get(), pairs[0][0], pairs[0][1], MPFR_RNDD);
  mpfr_mul(r.hi().get(), pairs[0][0], pairs[0][1], MPFR_RNDU);
  for (int i = 1; i < 4; ++i) {
    mpfr_mul(t.get(), pairs[i][0], pairs[i][1], MPFR_RNDD);
    if (mpfr_less_p(t.get(), r.lo().get())) mpfr_set(r.lo().get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), pairs[i][0], pairs[i][1], MPFR_RNDU);
    if (mpfr_greater_p(t.get(), r.hi().get())) mpfr_set(r.hi().get(), t.get(), MPFR_RNDU);
  }
  return r;
}

Interval operator*(const Interval& a, const mpz_class& z) {
  Interval r(a.precision());
  if (sgn(z) >= 0) {
    mpfr_mul_z(r.lo().get(), a.lo().get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi().get(), a.hi().get(), z.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(r.lo().get(), a.hi().get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi().get(), a.lo().get(), z.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

Interval operator+(const Interval& a, const mpz_class& z) {
  Interval r(a.precision());
  mpfr_add_z(r.lo().get(), a.lo().get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_add_z(r.hi().get(), a.hi().get(), z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const mpz_class& z) {
  Interval r(a.precision());
  mpfr_sub_z(r.lo().get(), a.lo().get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_sub_z(r.hi().get(), a.hi().get(), z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = prec_of(a, b);
  // 1/b then multiply; b excludes zero.
  Interval inv(p);
  mpfr_ui_div(inv.lo().get(), 1, b.hi().get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi().get(), 1, b.lo().get(), MPFR_RNDU);
  return a * inv;
}

Interval sqr(const Interval& a) {
  Interval r(a.precision());
  if (a.positive() || mpfr_sgn(a.lo().get()) == 0) {
    mpfr_sqr(r.lo().get(), a.lo().get(), MPFR_RNDD);
    mpfr_sqr(r.hi().get(), a.hi().get(), MPFR_RNDU);
  } else if (a.negative() || mpfr_sgn(a.hi().get()) == 0) {
    mpfr_sqr(r.lo().get(), a.hi().get(), MPFR_RNDD);
    mpfr_sqr(r.hi().get(), a.lo().get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo().get(), 1);
    BigFloat t(a.precision());
    mpfr_sqr(r.hi().get(), a.lo().get(), MPFR_RNDU);
    mpfr_sqr(t.get(), a.hi().get(), MPFR_RNDU);
    if (mpfr_greater_p(t.get(), r.hi().get())) mpfr_set(r.hi().get(), t.get(), MPFR_RNDU);
  }
  return r;
}

Interval sqrt(const Interval& a) {
  Interval r(a.precision());
  if (mpfr_sgn(a.lo().get()) <= 0)
    mpfr_set_zero(r.lo().get(), 1);
  else
    mpfr_sqrt(r.lo().get(), a.lo().get(), MPFR_RNDD);
  if (mpfr_sgn(a.hi().get()) <= 0)
    mpfr_set_zero(r.hi().get(), 1);
  else
    mpfr_sqrt(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  Interval r(a.precision());
  mpfr_log(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_log(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval abs(const Interval& a) {
  if (a.positive() || mpfr_sgn(a.lo().get()) == 0) return a;
  if (a.negative()) return -a;
  Interval r(a.precision());
  mpfr_set_zero(r.lo().get(), 1);
  BigFloat t(a.precision());
  mpfr_neg(t.get(), a.lo().get(), MPFR_RNDU);
  mpfr_max(r.hi().get(), t.get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(prec_of(a, b));
  mpfr_min(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval max_one(const Interval& a) {
  Interval r = a;
  if (mpfr_cmp_ui(r.lo().get(), 1) < 0) mpfr_set_ui(r.lo().get(), 1, MPFR_RNDD);
  if (mpfr_cmp_ui(r.hi().get(), 1) < 0) mpfr_set_ui(r.hi().get(), 1, MPFR_RNDU);
  return r;
}

bool certainly_less(const Interval& a, const mpz_class& z) { return mpfr_cmp_z(a.hi().get(), z.get_mpz_t()) < 0; }
bool certainly_greater(const Interval& a, const mpz_class& z) { return mpfr_cmp_z(a.lo().get(), z.get_mpz_t()) > 0; }

// ---------------------------------------------------------------------------
// CBox

CBox operator+(const CBox& a, const CBox& b) { return CBox(a.re + b.re, a.im + b.im); }
CBox operator-(const CBox& a, const CBox& b) { return CBox(a.re - b.re, a.im - b.im); }
CBox operator*(const CBox& a, const CBox& b) { return CBox(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re); }
CBox operator*(const CBox& a, const mpz_class& z) { return CBox(a.re * z, a.im * z); }
Interval norm2(const CBox& a) { return sqr(a.re) + sqr(a.im); }
Interval modulus(const CBox& a) { return sqrt(norm2(a)); }

// ---------------------------------------------------------------------------
// CFloat

void cadd(CFloat& out, const CFloat& a, const CFloat& b) {
  mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void csub(CFloat& out, const CFloat& a, const CFloat& b) {
  mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void cmul(CFloat& out, const CFloat& a, const CFloat& b) {
  const mpfr_prec_t p = out.precision();
  BigFloat t1(p), t2(p), re(p);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_set(out.re.get(), re.get(), MPFR_RNDN);
}

void cdiv(CFloat& out, const CFloat& a, const CFloat& b) {
  const mpfr_prec_t p = out.precision();
  BigFloat den(p), t1(p), t2(p), re(p);
  mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), out.im.get(), den.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), re.get(), den.get(), MPFR_RNDN);
}

BigFloat cabs(const CFloat& a) {
  BigFloat r(a.precision());
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  return r;
}

}  // namespace parry
