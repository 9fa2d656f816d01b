#include "parry/census.hpp"

#include <algorithm>
#include <sstream>

#include "parallel.hpp"
#include "parry/errors.hpp"
#include "parry/factor.hpp"

namespace parry {

std::optional<PerronAnalysis> census_member(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1) return std::nullopt;
  if (p.degree() > 1 && (p.coeff(0) == 0 || !is_squarefree(p))) return std::nullopt;
  PerronAnalysis a;
  try {
    a = analyze(p, false);
  } catch (const PreconditionViolated&) {
    // Only a reducible reciprocal polynomial gets here.
    if (is_irreducible(p)) throw;
    return std::nullopt;
  }
  if (a.tag == NumberTag::NotPerron) return std::nullopt;
  if (a.gamma) {
    AlgebraicReal th = theta0();
    if (compare_modulus(*a.roots, *a.gamma, th) == Ordering::Greater) return std::nullopt;
  }
  if (!is_irreducible(p)) return std::nullopt;
  return a;
}

CensusTally tally(const std::vector<CensusEntry>& entries) {
  CensusTally t;
  for (const auto& e : entries) {
    ++t.total;
    if (e.tag == NumberTag::Pisot) ++t.pisot;
    if (e.tag == NumberTag::Salem) {
      ++t.salem;
      if (!e.h.parry) ++t.salem_undecided;
    }
    if (e.h.parry && *e.h.parry) ++t.parry;
    const bool undecided_order = !e.h.infinite && e.h.lo != e.h.hi;
    if (undecided_order || (!e.h.parry && e.tag != NumberTag::Salem)) ++t.unknown;
    if (e.h.infinite)
      ++t.h_inf;
    else if (!undecided_order)
      ++t.h[e.h.lo];
    else
      ++t.h_undecided[e.h.label()];
  }
  return t;
}

CensusResult enumerate_census(int d, long n, const CensusOptions& opts) {
  if (n < 1) throw PreconditionViolated("coefficient bound must be positive");
  if (d < 1 || (!opts.allow_large && (d < 2 || d > 6)))
    throw PreconditionViolated("census degree must lie in [2, 6]");
  const std::size_t base = static_cast<std::size_t>(2 * n + 1);
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= base;

  std::vector<std::optional<CensusEntry>> slots(count);
  detail::parallel_for(count, opts.spectrum.jobs, [&](std::size_t idx) {
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    std::size_t r = idx;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<long>(r % base) - n;
      r /= base;
    }
    c[static_cast<std::size_t>(d)] = 1;
    IntPolynomial p(std::move(c));
    auto a = census_member(p);
    if (!a) return;
    SpectrumOptions so = opts.spectrum;
    so.jobs = 1;
    SpectrumReport rep = parry_spectrum(*a, so);
    CensusEntry e;
    e.min_poly = rep.poly;
    e.tag = rep.tag;
    e.h = h_class(rep);
    e.bound = rep.bound;
    e.spec = rep.spec;
    slots[idx] = std::move(e);
  });

  CensusResult out;
  out.d = d;
  out.n = n;
  out.scanned = count;
  for (auto& s : slots)
    if (s) out.entries.push_back(std::move(*s));
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CensusEntry& x, const CensusEntry& y) { return x.min_poly < y.min_poly; });
  out.tally = tally(out.entries);
  return out;
}

std::string census_csv(const CensusResult& r) {
  std::ostringstream os;
  os << "min_poly,class,h_class,parry,pisot,salem,source_count\n";
  for (const auto& e : r.entries) {
    os << e.min_poly.to_string() << ',' << to_string(e.tag) << ',' << e.h.label() << ','
       << (e.h.parry ? (*e.h.parry ? "1" : "0") : "?") << ',' << (e.tag == NumberTag::Pisot ? 1 : 0) << ','
       << (e.tag == NumberTag::Salem ? 1 : 0) << ',' << e.source_count << '\n';
  }
  return os.str();
}

}  // namespace parry
