#pragma once

#include <optional>
#include <vector>

#include "parry/polynomial.hpp"

namespace parry {

// Open interval with rational endpoints; nullopt means -inf / +inf.
struct OpenInterval {
  std::optional<mpq_class> lo;
  std::optional<mpq_class> hi;
};

// Sturm chain of the squarefree part of P, with positive rescaling only so
// that signs are preserved.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

// Exact number of distinct real roots of P in the open interval.
unsigned sturm_count(const IntPolynomial& p, const OpenInterval& interval);

// x^deg * P(1/x) == +-P(x).
bool self_reciprocal(const IntPolynomial& p);

// For P = reverse(P) of even degree 2m, the degree-m Q with P(x) = x^m Q(x + 1/x).
// Throws NotReciprocal otherwise.
IntPolynomial chebyshev_reduce(const IntPolynomial& p);

// x^m Q(x + 1/x) expanded back to a polynomial of degree 2m.
IntPolynomial chebyshev_expand(const IntPolynomial& q);

}  // namespace parry
