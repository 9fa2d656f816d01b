#pragma once

// Dense univariate polynomials over Z and Q with exact GMP arithmetic.
//
// Coefficients are stored in ascending order of degree with no trailing
// zeros, so the zero polynomial is the empty vector and equality is
// coefficient-wise.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parry {

class RatPolynomial;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  // Convenience for small literals, ascending order.
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial monomial(std::size_t degree, const mpz_class& c = 1);
  static IntPolynomial constant(const mpz_class& c);
  // x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Coefficient of x^i (zero past the degree).
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  mpz_class content() const;
  IntPolynomial primitive_part() const;
  // Primitive part normalized to a positive leading coefficient.
  IntPolynomial normalized() const;
  IntPolynomial derivative() const;
  // x^deg * P(1/x)
  IntPolynomial reversed() const;
  // P(-x)
  IntPolynomial negated_variable() const;
  IntPolynomial operator-() const;

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  // Sign of P(x) for exact rational x: -1, 0 or 1.
  int sign_at(const mpq_class& x) const;

  RatPolynomial to_rational() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const mpz_class& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }
  // Total order (degree, then coefficients from the top); used for dedupe keys.
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

  // Canonical symbolic text, descending, e.g. "x^3-5x^2-2x+5".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t i) const;
  const mpq_class& leading() const;

  RatPolynomial monic() const;
  RatPolynomial derivative() const;
  mpq_class evaluate(const mpq_class& x) const;
  // Scales by a positive rational so that the result has integer, coprime
  // coefficients; signs are preserved.
  IntPolynomial to_primitive_integer() const;

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(RatPolynomial a, const mpq_class& c);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

// Quotient and remainder over Q: a = q*b + r with deg r < deg b.
// Throws DivisionByZero when b is zero.
std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& a, const RatPolynomial& b);
std::pair<RatPolynomial, RatPolynomial> divrem(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a / b when b divides a in Z[x], otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& divisor, const IntPolynomial& a);

// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// Monic gcd over Q.
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

// Product of the distinct irreducible factors (primitive, positive leading coefficient).
IntPolynomial squarefree_part(const IntPolynomial& p);
bool is_squarefree(const IntPolynomial& p);

// Accepts "[1,-1,-1]" (descending) or symbolic "x^2-x-1" (any single-letter
// variable, optional '*', optional spaces). Throws ParseError.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace parry
