#include "parry/field.hpp"

#include "parry/errors.hpp"

namespace parry {

NumberField::NumberField(IntPolynomial modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.is_monic() || modulus_.degree() < 1)
    throw PreconditionViolated("number field modulus must be monic of degree >= 1: " + modulus_.to_string());
}

FieldPtr make_field(const IntPolynomial& modulus) { return std::make_shared<const NumberField>(modulus); }

FieldElement::FieldElement(FieldPtr field, std::vector<mpq_class> vec) : field_(std::move(field)), vec_(std::move(vec)) {
  if (vec_.size() > field_->degree()) {
    reduce_mod_monic(vec_, field_->modulus());
  } else {
    vec_.resize(field_->degree());
  }
  for (auto& c : vec_) c.canonicalize();
}

FieldElement FieldElement::zero(FieldPtr field) {
  std::size_t d = field->degree();
  return FieldElement(std::move(field), std::vector<mpq_class>(d));
}

FieldElement FieldElement::integer(FieldPtr field, const mpz_class& n) {
  std::vector<mpq_class> v(field->degree());
  v[0] = n;
  return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::generator(FieldPtr field) {
  std::vector<mpq_class> v{0, 1};
  return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::from_polynomial(FieldPtr field, const RatPolynomial& p) {
  return FieldElement(std::move(field), p.coeffs());
}

bool FieldElement::is_zero() const {
  for (const auto& c : vec_)
    if (c != 0) return false;
  return true;
}

std::optional<mpz_class> FieldElement::is_rational_integer() const {
  for (std::size_t i = 1; i < vec_.size(); ++i)
    if (vec_[i] != 0) return std::nullopt;
  if (vec_[0].get_den() != 1) return std::nullopt;
  return vec_[0].get_num();
}

RatPolynomial FieldElement::as_polynomial() const { return RatPolynomial(vec_); }

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_ && field_->modulus() != o.field_->modulus()) throw FieldMismatch();
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < vec_.size(); ++i) vec_[i] += o.vec_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < vec_.size(); ++i) vec_[i] -= o.vec_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const std::size_t d = vec_.size();
  std::vector<mpq_class> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (vec_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += vec_[i] * o.vec_[j];
  }
  reduce_mod_monic(prod, field_->modulus());
  vec_ = std::move(prod);
  return *this;
}

FieldElement& FieldElement::operator*=(const mpq_class& c) {
  for (auto& x : vec_) x *= c;
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  return a.vec_ == b.vec_;
}

FieldElement FieldElement::pow(unsigned long n) const {
  FieldElement result = integer(field_, 1);
  FieldElement base = *this;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < vec_.size(); ++i) {
    if (i) s += ", ";
    s += vec_[i].get_str();
  }
  return s + ")";
}

}  // namespace parry
