#pragma once

// Census of Perron numbers of degree d whose minimal polynomial
// x^d + a_{d-1} x^{d-1} + ... + a_0 has |a_i| <= N and whose other
// conjugates have modulus at most the golden ratio.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parry/classify.hpp"
#include "parry/spectrum.hpp"

namespace parry {

struct CensusOptions {
  SpectrumOptions spectrum{20000, 2000, 0, 1};
  bool allow_large = false;   // lift the d <= 6 guard
};

struct CensusEntry {
  IntPolynomial min_poly;
  NumberTag tag = NumberTag::NotPerron;
  HClass h;
  std::optional<std::size_t> bound;    // K(beta) for PerronOther
  std::vector<std::size_t> spec;
  std::size_t source_count = 1;
};

struct CensusTally {
  std::size_t total = 0;
  std::size_t parry = 0;           // orbit-certified, Salem included when its orbit closed
  std::size_t pisot = 0;
  std::size_t salem = 0;
  std::size_t salem_undecided = 0; // Salem members whose orbit did not close within budget
  std::size_t unknown = 0;         // entries with an undecided order or base status
  std::size_t h_inf = 0;
  std::map<std::size_t, std::size_t> h;                 // n -> #H_n (complete entries)
  std::map<std::string, std::size_t> h_undecided;       // "H_[a,b]" -> count
};

struct CensusResult {
  int d = 0;
  long n = 0;
  std::vector<CensusEntry> entries;   // sorted by min_poly
  CensusTally tally;
  std::size_t scanned = 0;            // polynomials enumerated
};

// Throws PreconditionViolated for d outside [2, 6] unless allow_large.
CensusResult enumerate_census(int d, long n, const CensusOptions& opts = {});

// Membership test: irreducible monic of degree d with a Perron root and
// every other conjugate of modulus <= golden ratio (ties settled exactly).
std::optional<PerronAnalysis> census_member(const IntPolynomial& p);

CensusTally tally(const std::vector<CensusEntry>& entries);

// Columns: min_poly,class,h_class,parry,pisot,salem,source_count
std::string census_csv(const CensusResult& r);

}  // namespace parry
