#pragma once

// Thin RAII wrappers over MPFR: BigFloat (round-to-nearest working numbers),
// Interval (outward-rounded real intervals) and CBox (complex rectangles).

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace parry {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  BigFloat(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), rnd);
  }
  BigFloat(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Changes precision keeping the (rounded) value.
  void round_to(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) { mpfr_prec_round(v_, prec, rnd); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  // Exact rational value of a finite number.
  mpq_class to_rational() const;
  std::string to_string(int digits = 12) const;

 private:
  mpfr_t v_;
};

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}
  Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  static Interval from_integer(const mpz_class& z, mpfr_prec_t prec);
  static Interval from_rational(const mpq_class& q, mpfr_prec_t prec);
  static Interval around(const BigFloat& center, const BigFloat& radius, mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat& lo() { return lo_; }
  BigFloat& hi() { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
  bool positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains(const mpz_class& z) const;
  // Upper bound on hi - lo.
  BigFloat width() const;
  BigFloat mid() const;
  std::string to_string(int digits = 12) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const mpz_class& z);
Interval operator+(const Interval& a, const mpz_class& z);
Interval operator-(const Interval& a, const mpz_class& z);
// Divisor must not contain zero.
Interval operator/(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
// Square root of the non-negative part.
Interval sqrt(const Interval& a);
Interval log(const Interval& a);
Interval abs(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
// max(1, a) elementwise.
Interval max_one(const Interval& a);

// a.hi < b.lo
inline bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi().get(), b.lo().get()); }
bool certainly_less(const Interval& a, const mpz_class& z);
bool certainly_greater(const Interval& a, const mpz_class& z);

// Complex rectangle re x im.
struct CBox {
  Interval re;
  Interval im;
  explicit CBox(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  CBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
};

CBox operator+(const CBox& a, const CBox& b);
CBox operator-(const CBox& a, const CBox& b);
CBox operator*(const CBox& a, const CBox& b);
CBox operator*(const CBox& a, const mpz_class& z);
Interval norm2(const CBox& a);
Interval modulus(const CBox& a);

// Round-to-nearest complex number for iterative root finding.
struct CFloat {
  BigFloat re;
  BigFloat im;
  explicit CFloat(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  CFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  mpfr_prec_t precision() const { return re.precision(); }
  void round_to(mpfr_prec_t prec) {
    re.round_to(prec);
    im.round_to(prec);
  }
};

void cadd(CFloat& out, const CFloat& a, const CFloat& b);
void csub(CFloat& out, const CFloat& a, const CFloat& b);
void cmul(CFloat& out, const CFloat& a, const CFloat& b);
void cdiv(CFloat& out, const CFloat& a, const CFloat& b);
// |a| rounded to nearest.
BigFloat cabs(const CFloat& a);

}  // namespace parry
