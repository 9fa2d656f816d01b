#pragma once

// Named families of Perron numbers and the cubic propositions.
//
//   beta_d:  x^d - x - 1
//   theta_d: x^d - x^{d-1} - 1, less the factor x^2 - x + 1 when d = 5 mod 6
//   P_d:     x^3 - d x^2 - 2x + d

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parry/digits.hpp"
#include "parry/polynomial.hpp"
#include "parry/spectrum.hpp"

namespace parry {

enum class Family { BetaD, ThetaD, CubicD, GenericCubic };

const char* to_string(Family f);

struct FamilyMember {
  Family family = Family::BetaD;
  long d = 0;
  long a = 0, b = 0, c = 0;   // GenericCubic
  IntPolynomial poly;
  std::string notes;          // factors removed, if any
};

// d >= 2; throws PreconditionViolated.
FamilyMember family_beta(long d);
FamilyMember family_theta(long d);
FamilyMember family_cubic(long d);

enum class Verdict { Confirmed, Falsified, Unknown, Outside };

const char* to_string(Verdict v);

struct HarnessRow {
  FamilyMember member;
  SpectrumReport report;
  std::string beta;           // decimal approximation of the Perron root
  std::string gamma;          // dominant conjugate, empty for Pisot / Salem
  Verdict verdict = Verdict::Unknown;
  std::string detail;
};

// Conjecture checks: beta_d^k non-Parry for every k >= 1 (d >= 4);
// theta_d simple Parry with expansion 1 0^{d-2} 1 and theta_d^k non-Parry for
// k >= 2 (d >= 6). Smaller d are reported as Outside (Pisot).
std::vector<HarnessRow> conjecture_harness(Family family, long d_min, long d_max, const SpectrumOptions& opts = {});

// a ((b-1) (a-c))^w for x^3 - a x^2 - b x + c with 0 <= c <= a, 1 <= b <= a-1
// and an irreducible cubic. Throws ConstraintViolated.
DigitString cubic_closed_form(long a, long b, long c);

// Spectrum of the Perron root of x^3 - d x^2 - 2x + d predicted piecewise
// for 1 <= d <= 100: odd powers up to d, d-2 or d-4 (d odd) and d-1, d-3 or
// d-5 (d even). Empty optional outside that range.
std::optional<std::vector<std::size_t>> cubic_family_expected(long d);

struct CubicFamilyRow {
  long d = 0;
  IntPolynomial poly;
  bool reducible = false;
  SpectrumReport report;
  std::optional<std::vector<std::size_t>> expected;
  bool matches = false;
  bool all_odd = false;
};

std::vector<CubicFamilyRow> cubic_family_spectrum(long d_min, long d_max, const SpectrumOptions& opts = {});

enum class CubicCase { Pisot, ComplexPairOutside, TotallyRealCase2, TotallyRealCase3, TotallyRealCase4 };

const char* to_string(CubicCase c);

struct CubicLabel {
  CubicCase kind = CubicCase::Pisot;
  bool solomyak = false;   // case 2 with |gamma| > golden ratio: order 0
  std::string to_string() const;
};

// Case analysis of an irreducible cubic Perron polynomial by the signs of
// its real conjugates against -1 and 1. Throws NotCubic, NotPerron.
CubicLabel cubic_classify(const IntPolynomial& p);

}  // namespace parry
