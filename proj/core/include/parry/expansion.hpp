#pragma once

// From digit strings back to numbers: companion polynomials, Parry's
// admissibility condition, and construction of non-simple Parry numbers
// near a given rational.

#include <cstddef>

#include "parry/digits.hpp"
#include "parry/orbit.hpp"
#include "parry/polynomial.hpp"

namespace parry {

// x^n - a_1 x^{n-1} - ... - a_n for a finite string; for a periodic one the
// difference of that polynomial over pre+period and over pre. Throws EmptyDigits.
IntPolynomial companion_polynomial(const DigitString& digits);

// Every shift of the sequence is lexicographically strictly below it.
bool check_self_admissible(const DigitString& digits);

struct ExpansionRoot {
  DigitString digits;
  IntPolynomial companion;
  // Minimal polynomial of beta when `minimal`; otherwise the companion
  // polynomial with powers of x divided out.
  IntPolynomial polynomial;
  bool minimal = false;
  BisectedRoot beta;
};

// The number whose greedy expansion of 1 is `digits`: the unique root > 1
// of the companion polynomial. The minimal polynomial is found by factoring
// when the companion (less x powers and cyclotomic factors) has degree at
// most factor_limit. Throws NotAdmissible.
ExpansionRoot beta_from_expansion(const DigitString& digits, long factor_limit = 16);

// Greedy expansion of the root, run over ExpansionRoot::polynomial.
OrbitOutcome round_trip(const ExpansionRoot& root, std::size_t budget);

// First n digits of the quasi-greedy expansion of 1 in the rational base r > 1
// (the greedy expansion unless that one is finite).
Digits quasi_greedy_digits(const mpq_class& r, std::size_t n);

struct DensityWitness {
  ExpansionRoot root;
  std::size_t prefix = 0;   // j: length of the flanking prefix
  std::size_t zeros = 0;    // m: zero padding
};

// A non-simple Parry number within eps of r, from a prefix c_1..c_j of the
// expansion of r: c_1 .. c_j 0^m (c_1 .. c_{j-1} 0^m)^w with the smallest
// admissible m. The result is re-expanded greedily and checked.
DensityWitness density_witness(const mpq_class& r, const mpq_class& eps);

}  // namespace parry
