#pragma once

// Parry spectrum and Parry order: which powers beta^k are Parry numbers.
//
// Powers k >= K(beta) are non-Parry by Solomyak's bound, so only k < K need
// classifying. Each power is handled on its own minimal polynomial: Boyd's
// test, then the orbit of 1 with the Akiyama scan running alongside.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parry/classify.hpp"
#include "parry/criteria.hpp"
#include "parry/orbit.hpp"

namespace parry {

struct SpectrumOptions {
  std::size_t orbit_budget = 50000;
  std::size_t akiyama_budget = 10000;
  // Powers classified for Salem numbers (their spectrum is left open otherwise).
  std::size_t salem_prefix = 0;
  unsigned jobs = 1;
};

struct PowerEntry {
  std::size_t k = 0;
  IntPolynomial poly;   // minimal polynomial of beta^k
  ParryStatus status;
};

struct SpectrumReport {
  IntPolynomial poly;
  NumberTag tag = NumberTag::NotPerron;
  std::optional<std::size_t> bound;        // K(beta); powers k >= K are Solomyak-certified
  std::vector<PowerEntry> per_power;       // k = 1 .. K-1 (or the Salem prefix)
  std::vector<std::size_t> spec;           // powers certified Parry
  std::vector<std::size_t> unknowns;       // powers left undecided
  bool infinite = false;                   // Pisot or Salem: Ord = infinity
  std::size_t ord_lo = 0, ord_hi = 0;      // Ord in [ord_lo, ord_hi]; equal when complete
  std::optional<OrderBound> mahler;        // N_p(beta) for PerronOther

  bool complete() const { return unknowns.empty(); }
  // Exact order; nullopt when infinite or unknowns remain.
  std::optional<std::size_t> ord() const;
  // "inf", "47", or "[3,7]".
  std::string ord_string() const;
  std::string spec_string() const;         // "{1,3,5}", "N" for Pisot, "?" for Salem
};

// Throws NotPerron.
SpectrumReport parry_spectrum(const IntPolynomial& p, const SpectrumOptions& opts = {});
// For an analysis already at hand; its root system is refined in place.
SpectrumReport parry_spectrum(const PerronAnalysis& a, const SpectrumOptions& opts = {});

// Status of a single Perron polynomial: Boyd, then orbit with Akiyama scan.
// Memoized on the polynomial and budgets.
ParryStatus power_status(const PerronAnalysis& a, const SpectrumOptions& opts);
void clear_status_cache();

struct DivisionCheck {
  std::size_t m = 0;
  std::size_t expected = 0;   // ord / m
  SpectrumReport power;       // spectrum of beta^m
  bool holds = false;
};

// Ord(beta^m) == Ord(beta) / m for m dividing a finite, complete order.
// Throws UnknownsPresent or PreconditionViolated.
DivisionCheck order_division_check(const SpectrumReport& report, std::size_t m, const SpectrumOptions& opts = {});

struct HClass {
  bool infinite = false;
  std::size_t lo = 0, hi = 0;     // H_n with n in [lo, hi]
  std::optional<bool> parry;      // beta itself Parry; nullopt when undecided
  bool totally_real = false;

  // "H_inf", "H_2", "H_[3,7]"
  std::string label() const;
};

HClass h_class(const SpectrumReport& report);
HClass h_class(const IntPolynomial& p, const SpectrumOptions& opts = {});

}  // namespace parry
