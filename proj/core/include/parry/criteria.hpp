#pragma once

// Certificates of non-Parry-ness and the two upper bounds on the Parry order.
//
//   Solomyak: a conjugate of modulus > golden ratio.
//   Boyd:     beta < |P(0)|.
//   Akiyama:  |sigma(T^n(1))| > floor(beta) / (|gamma| - 1) for some n.
//
// K(beta) is the least k with |gamma|^k > golden ratio, so every power k >= K
// is Solomyak-certified.

#include <cstddef>
#include <optional>
#include <string>

#include "parry/classify.hpp"
#include "parry/mpfr.hpp"
#include "parry/orbit.hpp"

namespace parry {

enum class Outcome { NonParry, Inconclusive };

struct CriterionVerdict {
  Criterion criterion = Criterion::None;
  Outcome outcome = Outcome::Inconclusive;
  std::string conjugate;                  // enclosure of the conjugate used
  std::optional<std::size_t> index;       // Akiyama n
  std::optional<mpz_class> tail;          // Boyd |P(0)|
  std::optional<StatusKind> orbit;        // Akiyama: set when the orbit closed first

  bool non_parry() const { return outcome == Outcome::NonParry; }
  ParryStatus status() const;             // NonParry status carrying the witness
};

CriterionVerdict solomyak_test(const PerronAnalysis& a);
CriterionVerdict boyd_test(const PerronAnalysis& a);
// Requires a PerronOther analysis; throws PreconditionViolated otherwise.
CriterionVerdict akiyama_test(const PerronAnalysis& a, std::size_t budget);

CriterionVerdict solomyak_test(const IntPolynomial& p);
CriterionVerdict boyd_test(const IntPolynomial& p);
CriterionVerdict akiyama_test(const IntPolynomial& p, std::size_t budget = 10000);

// Least k >= 1 with |gamma|^k > golden ratio; a tie |gamma|^k = golden ratio
// is settled exactly on the power polynomial. PerronOther only.
std::size_t k_bound(const PerronAnalysis& a);
std::size_t k_bound(const IntPolynomial& p);

struct OrderBound {
  Interval value;          // d log(golden ratio) / (log M(beta) - log beta)
  mpq_class upper;         // rational upper bound of value
  bool non_parry = false;  // value < 1 certified
};

OrderBound np_bound(const PerronAnalysis& a);
OrderBound np_bound(const IntPolynomial& p);

}  // namespace parry
