#pragma once

// Symmetric-function constructions on the roots of a monic integer
// polynomial, carried out exactly through Newton's identities.

#include <cstddef>
#include <vector>

#include "parry/polynomial.hpp"

namespace parry {

// Power sums p_1..p_count of the roots of a monic P.
std::vector<mpz_class> power_sums(const IntPolynomial& monic, std::size_t count);

// Monic polynomial of degree `degree` whose root power sums are
// sums[0..degree-1] (sums[j-1] = p_j). Integral because the caller's sums
// come from algebraic integers.
IntPolynomial from_power_sums(const std::vector<mpz_class>& sums, std::size_t degree);

// Res_y(a(y), x - y^n) = prod_i (x - alpha_i^n) for monic a.
IntPolynomial resultant_power(const IntPolynomial& a, std::size_t n);

// Minimal polynomial of beta^n for the minimal polynomial P of a Perron
// number beta. Throws DegreeDropped when the power polynomial is not
// squarefree (P was not the minimal polynomial of a Perron number).
IntPolynomial min_poly_of_power(const IntPolynomial& p, std::size_t n);

// prod_{i,j} (x - alpha_i * alpha_j): degree d^2, contains every |alpha|^2
// for real P, since conj(alpha) is again a root.
IntPolynomial pairwise_product_polynomial(const IntPolynomial& monic);

}  // namespace parry
