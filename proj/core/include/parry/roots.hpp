#pragma once

// Certified isolation of all complex roots of a squarefree integer polynomial.
//
// Approximations come from Aberth iteration; each approximation z_i is then
// certified by the Weierstrass inclusion disc D(z_i, 2 n |W_i|), where
// W_i = P(z_i) / (a_n prod_{j != i} (z_i - z_j)). When the discs are pairwise
// disjoint each one holds exactly one root.

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "parry/mpfr.hpp"
#include "parry/polynomial.hpp"

namespace parry {

// Process-wide precision ceiling for numeric comparisons (bits).
mpfr_prec_t precision_ceiling();
void set_precision_ceiling(mpfr_prec_t bits);

struct RootEnclosure {
  CFloat center;
  BigFloat radius;          // certified: |root - center| <= radius
  bool real = false;        // certified real; box() then has a zero imaginary part
  std::size_t conjugate = 0;  // index of the complex conjugate root (self when real)

  mpfr_prec_t precision_bits() const { return center.precision(); }
  CBox box() const;
  Interval real_part() const;
  Interval imag_part() const;
  Interval modulus() const;
  // Short decimal form such as "1.253" or ".4938-.9056i".
  std::string to_string(int digits = 4) const;
};

class RootSystem {
 public:
  // The polynomial is replaced by its squarefree part unless the caller
  // promises squarefreeness.
  explicit RootSystem(const IntPolynomial& p, bool known_squarefree = false,
                      const std::vector<std::complex<double>>& guesses = {});

  // Roots of the minimal polynomial of beta^k, given the roots of beta. The
  // enclosures are k-th powers of the base enclosures; they isolate because
  // the k-th powers of distinct conjugates of a Perron number are distinct.
  // Refinement refines the private copy of the base system.
  RootSystem(const IntPolynomial& power_poly, const RootSystem& base, std::size_t k);

  const IntPolynomial& polynomial() const { return poly_; }
  std::size_t size() const { return roots_.size(); }
  const RootEnclosure& operator[](std::size_t i) const { return roots_[i]; }
  const std::vector<RootEnclosure>& roots() const { return roots_; }
  mpfr_prec_t precision() const { return prec_; }
  bool derived() const { return base_ != nullptr; }

  // Doubles the working precision and recertifies. Every new disc lies inside
  // its predecessor.
  void refine();
  void refine_to(mpfr_prec_t bits);

  // Centers as doubles, for seeding related systems.
  std::vector<std::complex<double>> approximations() const;

 private:
  bool aberth(mpfr_prec_t prec, int max_iter);
  bool certify(std::vector<RootEnclosure>& out) const;
  void initial_isolation(const std::vector<std::complex<double>>& guesses);
  bool derive(std::vector<RootEnclosure>& out) const;
  void adopt(std::vector<RootEnclosure> fresh);

  IntPolynomial poly_;
  mpfr_prec_t prec_ = 64;
  std::vector<CFloat> z_;
  std::vector<RootEnclosure> roots_;
  std::shared_ptr<RootSystem> base_;
  std::size_t power_ = 1;
  std::vector<std::size_t> from_base_;  // roots_[i] comes from base root from_base_[i]
};

// Roots ordered by descending modulus upper bound.
std::vector<RootEnclosure> isolate_roots(const IntPolynomial& p);

// Horner evaluation with outward rounding.
Interval evaluate(const std::vector<mpz_class>& ascending, const Interval& x);
Interval evaluate(const std::vector<mpq_class>& ascending, const Interval& x);
CBox evaluate(const std::vector<mpz_class>& ascending, const CBox& z);
CBox evaluate(const std::vector<mpq_class>& ascending, const CBox& z);

}  // namespace parry
