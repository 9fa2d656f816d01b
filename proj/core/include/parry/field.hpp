#pragma once

// Elements of Q(beta) in the power basis 1, beta, ..., beta^{d-1}.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parry/polynomial.hpp"

namespace parry {

// Q[x]/(P) for a monic P. Irreducibility is the caller's contract.
class NumberField {
 public:
  explicit NumberField(IntPolynomial modulus);
  const IntPolynomial& modulus() const { return modulus_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }

 private:
  IntPolynomial modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const IntPolynomial& modulus);

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<mpq_class> vec);

  static FieldElement zero(FieldPtr field);
  static FieldElement integer(FieldPtr field, const mpz_class& n);
  static FieldElement generator(FieldPtr field);
  // Reduces an arbitrary polynomial in the generator.
  static FieldElement from_polynomial(FieldPtr field, const RatPolynomial& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<mpq_class>& vec() const { return vec_; }
  bool is_zero() const;
  // The integer n when the element equals n, otherwise nullopt.
  std::optional<mpz_class> is_rational_integer() const;
  // Element as a polynomial of degree < d in the generator.
  RatPolynomial as_polynomial() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const mpq_class& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement pow(unsigned long n) const;
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& o) const;
  FieldPtr field_;
  std::vector<mpq_class> vec_;
};

// Reduces coefficients (ascending, any length) modulo a monic polynomial in place;
// on return the vector has exactly deg(modulus) entries.
template <class T>
void reduce_mod_monic(std::vector<T>& c, const IntPolynomial& modulus) {
  const std::size_t d = static_cast<std::size_t>(modulus.degree());
  const auto& m = modulus.coeffs();
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k] == 0) continue;
    T top = c[k];
    for (std::size_t j = 0; j < d; ++j) c[k - d + j] -= top * m[j];
    c[k] = 0;
  }
  c.resize(d);
}

}  // namespace parry
