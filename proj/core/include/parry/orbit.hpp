#pragma once

// Exact beta-transformation dynamics on Z[beta].
//
// Orbit states T^k(1) are kept as integer coordinate vectors modulo a monic
// polynomial with beta as a root, so cycle detection compares exact vectors.
// Digits d_k = floor(beta * T^{k-1}(1)) come from interval evaluation at a
// certified enclosure of beta, refined until the floor is unambiguous.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parry/classify.hpp"
#include "parry/digits.hpp"
#include "parry/field.hpp"
#include "parry/polynomial.hpp"
#include "parry/roots.hpp"

namespace parry {

// A refinable enclosure of a real root.
class RealRootSource {
 public:
  virtual ~RealRootSource() = default;
  virtual Interval interval() const = 0;
  virtual mpfr_prec_t precision() const = 0;
  virtual void refine() = 0;
};

// Real root taken from a RootSystem.
class SystemRoot final : public RealRootSource {
 public:
  SystemRoot(std::shared_ptr<RootSystem> rs, std::size_t index) : rs_(std::move(rs)), index_(index) {}
  Interval interval() const override { return (*rs_)[index_].real_part(); }
  mpfr_prec_t precision() const override { return rs_->precision(); }
  void refine() override { rs_->refine(); }

 private:
  std::shared_ptr<RootSystem> rs_;
  std::size_t index_;
};

// Real root isolated by exact bisection of a sign change; for polynomials too
// large to isolate completely.
class BisectedRoot final : public RealRootSource {
 public:
  // p must change sign on [lo, hi] and have a single root there.
  BisectedRoot(IntPolynomial p, mpq_class lo, mpq_class hi);
  Interval interval() const override;
  mpfr_prec_t precision() const override { return prec_; }
  void refine() override;
  const mpq_class& lo() const { return lo_; }
  const mpq_class& hi() const { return hi_; }

 private:
  void bisect_to(mpfr_prec_t bits);
  IntPolynomial p_;
  mpq_class lo_, hi_;
  int sign_lo_;
  mpfr_prec_t prec_ = 0;
};

// Exact floor of a real number given by coordinates (ascending powers of beta).
mpz_class floor_of(const std::vector<mpz_class>& coords, RealRootSource& beta);
mpz_class floor_of(const FieldElement& x, RealRootSource& beta);

enum class StatusKind { SimpleParry, Parry, NonParry, Unknown };
enum class Criterion { None, Solomyak, Boyd, Akiyama };

const char* to_string(StatusKind k);
const char* to_string(Criterion c);

struct ParryStatus {
  StatusKind kind = StatusKind::Unknown;
  DigitString digits;                 // SimpleParry / Parry
  Criterion criterion = Criterion::None;
  std::size_t akiyama_index = 0;      // Akiyama witness n
  std::string conjugate;              // conjugate used by Solomyak / Akiyama
  mpz_class tail;                     // |P(0)| for Boyd
  std::size_t budget = 0;             // steps spent when Unknown

  bool is_parry() const { return kind == StatusKind::SimpleParry || kind == StatusKind::Parry; }
  // "SimpleParry 1 1", "Parry 5 (1 0)^w", "NonParry Akiyama n=82", "Unknown budget=50000".
  std::string to_string() const;
};

struct OrbitRecord {
  FieldPtr field;                               // Q(beta) over the orbit modulus
  std::vector<std::vector<mpz_class>> states;   // states[k] = T^k(1)
  Digits digits;                                // digits[k-1] = d_k
  std::optional<std::size_t> cycle_start;
  std::size_t budget_used = 0;

  FieldElement state(std::size_t k) const;
};

// Akiyama scan run alongside the orbit.
struct AkiyamaScan {
  std::shared_ptr<RootSystem> roots;  // roots of the orbit modulus
  std::size_t gamma = 0;
  std::size_t budget = 0;             // largest index n examined
};

struct OrbitOutcome {
  OrbitRecord record;
  ParryStatus status;
};

// Iterates x -> beta x - floor(beta x) from 1 modulo the monic `modulus`.
// Stops on 0, on a repeated state, on an Akiyama witness, or on the budget.
OrbitOutcome run_orbit(const IntPolynomial& modulus, RealRootSource& beta, std::size_t budget,
                       const AkiyamaScan* akiyama = nullptr, bool keep_states = true);

// Greedy expansion of 1 in base beta for an analysed Perron polynomial.
OrbitOutcome greedy_expansion(const PerronAnalysis& a, std::size_t budget);
// Convenience entry: classifies first; throws NotPerron.
OrbitOutcome greedy_expansion(const IntPolynomial& p, std::size_t budget = 50000);

}  // namespace parry
