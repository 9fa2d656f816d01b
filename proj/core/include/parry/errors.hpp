#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace parry {

class IntPolynomial;

// Base class for every error raised by the library.
class ParryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ParryError {
 public:
  using ParryError::ParryError;
};

class DivisionByZero : public ParryError {
 public:
  DivisionByZero() : ParryError("division by the zero polynomial") {}
};

class FieldMismatch : public ParryError {
 public:
  FieldMismatch() : ParryError("field elements live in different fields") {}
};

class DegreeDropped : public ParryError {
 public:
  using ParryError::ParryError;
};

class NotReciprocal : public ParryError {
 public:
  using ParryError::ParryError;
};

class NotPerron : public ParryError {
 public:
  using ParryError::ParryError;
};

class NotAdmissible : public ParryError {
 public:
  using ParryError::ParryError;
};

class EmptyDigits : public ParryError {
 public:
  EmptyDigits() : ParryError("digit string is empty") {}
};

class PreconditionViolated : public ParryError {
 public:
  using ParryError::ParryError;
};

class ConstraintViolated : public ParryError {
 public:
  using ParryError::ParryError;
};

class NotCubic : public ParryError {
 public:
  using ParryError::ParryError;
};

class UnknownsPresent : public ParryError {
 public:
  using ParryError::ParryError;
};

class PrecisionExhausted : public ParryError {
 public:
  using ParryError::ParryError;
};

// Thrown when a polynomial expected to be irreducible factors; carries the factors.
class Reducible : public ParryError {
 public:
  Reducible(const std::string& what, std::vector<std::string> factors)
      : ParryError(what), factors_(std::move(factors)) {}
  const std::vector<std::string>& factors() const { return factors_; }

 private:
  std::vector<std::string> factors_;
};

}  // namespace parry
