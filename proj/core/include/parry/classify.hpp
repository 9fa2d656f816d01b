#pragma once

// Certified modulus comparisons and the Pisot / Salem / Perron classification.

#include <memory>
#include <optional>
#include <string>

#include "parry/polynomial.hpp"
#include "parry/roots.hpp"

namespace parry {

enum class Ordering { Less, Equal, Greater };

const char* to_string(Ordering o);

// A real algebraic number given by its minimal polynomial and a certified
// real root of it.
class AlgebraicReal {
 public:
  // The largest real root of p.
  static AlgebraicReal largest_real_root(const IntPolynomial& p);
  static AlgebraicReal integer(long n);

  AlgebraicReal(std::shared_ptr<RootSystem> roots, std::size_t index);

  const IntPolynomial& polynomial() const { return roots_->polynomial(); }
  const RootEnclosure& enclosure() const { return (*roots_)[index_]; }
  Interval interval() const { return enclosure().real_part(); }
  mpfr_prec_t precision() const { return roots_->precision(); }
  void refine() { roots_->refine(); }

 private:
  std::shared_ptr<RootSystem> roots_;
  std::size_t index_;
};

// Golden ratio (x^2-x-1), plastic ratio (x^3-x-1), Lehmer's number.
AlgebraicReal theta0();
AlgebraicReal rho();
AlgebraicReal tau10();
const IntPolynomial& lehmer_polynomial();

// |root i of rs| against a positive real constant. Refines numerically; if
// the enclosures still overlap at the precision ceiling the exact test runs:
// |a|^2 and c^2 are both roots of a squarefree integer polynomial T and are
// equal iff they fall into the same isolating disc of T. The exact test is
// also tried early (from 512 bits) since a genuine tie never separates.
Ordering compare_modulus(RootSystem& rs, std::size_t i, AlgebraicReal& c);

// |root i| against |root j| of the same (monic) polynomial.
Ordering compare_root_moduli(RootSystem& rs, std::size_t i, std::size_t j);

// Re(root i) against Re(root j), for roots whose moduli tie.
Ordering compare_real_parts(RootSystem& rs, std::size_t i, std::size_t j);

enum class NumberTag { Pisot, Salem, PerronOther, NotPerron };

const char* to_string(NumberTag t);

struct NumberClass {
  NumberTag tag = NumberTag::NotPerron;
  std::optional<RootEnclosure> witness;  // present iff PerronOther
};

// Everything later stages need about a Perron polynomial.
struct PerronAnalysis {
  IntPolynomial poly;
  std::shared_ptr<RootSystem> roots;
  NumberTag tag = NumberTag::NotPerron;
  std::size_t beta = 0;                 // Perron root (unless NotPerron)
  std::optional<std::size_t> gamma;     // selected conjugate (PerronOther only)

  const RootEnclosure& beta_enclosure() const { return (*roots)[beta]; }
  const RootEnclosure& gamma_enclosure() const { return (*roots)[*gamma]; }
};

// Classifies P. Irreducibility is checked with the factorizer when asked;
// a reducible P throws Reducible.
PerronAnalysis analyze(const IntPolynomial& p, bool check_irreducible = true);

// Analysis of beta^k. Root isolation is seeded with the k-th powers of the
// base roots.
PerronAnalysis analyze_power(const PerronAnalysis& a, std::size_t k);
NumberClass classify_number(const IntPolynomial& p);

struct RationalInterval {
  mpq_class lo;
  mpq_class hi;
  mpq_class width() const { return hi - lo; }
};

// Enclosure of |a| prod max(1, |alpha_i|) of width < eps.
RationalInterval mahler_measure(const IntPolynomial& p, const mpq_class& eps);
// Interval enclosure of M(P) at the current precision of rs.
Interval mahler_interval(const RootSystem& rs);

}  // namespace parry
