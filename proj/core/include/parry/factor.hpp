#pragma once

// Factorization over Z for small degrees by root-subset reconstruction:
// isolate all roots, try conjugation-closed subsets by ascending size, pin
// the coefficients of the subset product to integers, confirm by exact
// division. The first factor found at the smallest size is irreducible.

#include <cstddef>
#include <utility>
#include <vector>

#include "parry/polynomial.hpp"

namespace parry {

// Squarefree decomposition q = prod s_i^i of a primitive polynomial (Yun).
// Returns pairs (s_i, i) with deg s_i > 0.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p);

// Irreducible factors of a squarefree primitive polynomial.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& s);

// Complete factorization. Factors are primitive with positive leading
// coefficient and repeated according to multiplicity; when the content of
// p is not 1 (or p has a negative leading coefficient) a constant factor comes
// first. The product of the output equals p exactly.
std::vector<IntPolynomial> factor_bounded(const IntPolynomial& p);

bool is_irreducible(const IntPolynomial& p);

// Cyclotomic polynomial Phi_n.
IntPolynomial cyclotomic(unsigned n);

// Divides out every power of x and every cyclotomic factor.
IntPolynomial strip_cyclotomic(const IntPolynomial& p);

}  // namespace parry
