#include "parry/spectrum.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "parallel.hpp"
#include "parry/errors.hpp"
#include "parry/power_sums.hpp"
#include "parry/real_roots.hpp"

namespace parry {

namespace {

std::mutex cache_mu;
std::map<std::string, ParryStatus>& status_cache() {
  static std::map<std::string, ParryStatus> cache;
  return cache;
}

std::string cache_key(const IntPolynomial& p, const SpectrumOptions& o) {
  return p.to_string() + "|" + std::to_string(o.orbit_budget) + "|" + std::to_string(o.akiyama_budget);
}

ParryStatus orbit_status(const PerronAnalysis& a, std::size_t budget, const AkiyamaScan* scan) {
  SystemRoot beta(a.roots, a.beta);
  return run_orbit(a.poly, beta, budget, scan, false).status;
}

ParryStatus compute_status(const PerronAnalysis& a, const SpectrumOptions& opts) {
  if (a.tag != NumberTag::PerronOther) return orbit_status(a, opts.orbit_budget, nullptr);
  CriterionVerdict boyd = boyd_test(a);
  if (boyd.non_parry()) return boyd.status();
  CriterionVerdict sol = solomyak_test(a);
  if (sol.non_parry()) return sol.status();
  AkiyamaScan scan{a.roots, *a.gamma, opts.akiyama_budget};
  ParryStatus s = orbit_status(a, opts.orbit_budget, &scan);
  if (s.kind == StatusKind::Unknown && opts.akiyama_budget > opts.orbit_budget) {
    s = orbit_status(a, opts.akiyama_budget, &scan);
    if (s.kind == StatusKind::Unknown) s.budget = opts.akiyama_budget;
  }
  return s;
}

void assemble(SpectrumReport& r) {
  r.spec.clear();
  r.unknowns.clear();
  for (const auto& e : r.per_power) {
    if (e.status.is_parry()) r.spec.push_back(e.k);
    if (e.status.kind == StatusKind::Unknown) r.unknowns.push_back(e.k);
  }
  if (r.infinite) return;
  r.ord_lo = r.spec.empty() ? 0 : r.spec.back();
  r.ord_hi = r.ord_lo;
  if (!r.unknowns.empty()) r.ord_hi = std::max(r.ord_hi, r.unknowns.back());
}

}  // namespace

std::optional<std::size_t> SpectrumReport::ord() const {
  if (infinite || ord_lo != ord_hi) return std::nullopt;
  return ord_lo;
}

std::string SpectrumReport::ord_string() const {
  if (infinite) return "inf";
  if (ord_lo == ord_hi) return std::to_string(ord_lo);
  return "[" + std::to_string(ord_lo) + "," + std::to_string(ord_hi) + "]";
}

std::string SpectrumReport::spec_string() const {
  if (tag == NumberTag::Pisot) return "N";
  if (tag == NumberTag::Salem) return "?";
  std::string s = "{";
  for (std::size_t i = 0; i < spec.size(); ++i) s += (i ? "," : "") + std::to_string(spec[i]);
  return s + "}";
}

ParryStatus power_status(const PerronAnalysis& a, const SpectrumOptions& opts) {
  if (a.tag == NumberTag::NotPerron) throw NotPerron("not a Perron polynomial: " + a.poly.to_string());
  const std::string key = cache_key(a.poly, opts);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = status_cache().find(key);
    if (it != status_cache().end()) return it->second;
  }
  ParryStatus s = compute_status(a, opts);
  std::lock_guard<std::mutex> lock(cache_mu);
  status_cache().emplace(key, s);
  return s;
}

void clear_status_cache() {
  std::lock_guard<std::mutex> lock(cache_mu);
  status_cache().clear();
}

SpectrumReport parry_spectrum(const IntPolynomial& p, const SpectrumOptions& opts) {
  return parry_spectrum(analyze(p), opts);
}

namespace {
// Private root system for the power tasks; the k = 1 task may refine a.roots
// concurrently.
PerronAnalysis snapshot(const PerronAnalysis& a) {
  PerronAnalysis s = a;
  if (a.roots) s.roots = std::make_shared<RootSystem>(*a.roots);
  return s;
}
}  // namespace

SpectrumReport parry_spectrum(const PerronAnalysis& a, const SpectrumOptions& opts) {
  if (a.tag == NumberTag::NotPerron) throw NotPerron("not a Perron polynomial: " + a.poly.to_string());
  SpectrumReport r;
  r.poly = a.poly;
  r.tag = a.tag;

  if (a.tag == NumberTag::Pisot || a.tag == NumberTag::Salem) {
    r.infinite = true;
    const std::size_t n = a.tag == NumberTag::Salem ? std::max<std::size_t>(1, opts.salem_prefix) : 1;
    r.per_power.resize(n);
    const PerronAnalysis snap = snapshot(a);
    detail::parallel_for(n, opts.jobs, [&](std::size_t i) {
      const std::size_t k = i + 1;
      PerronAnalysis ak = k == 1 ? a : analyze_power(snap, k);
      r.per_power[i] = PowerEntry{k, ak.poly, power_status(ak, opts)};
    });
    assemble(r);
    return r;
  }

  const std::size_t K = k_bound(a);
  r.bound = K;
  r.mahler = np_bound(a);
  const bool boyd_all = boyd_test(a).non_parry();  // beta^k < |P(0)|^k for every k
  r.per_power.resize(K - 1);
  const PerronAnalysis snap = snapshot(a);
  detail::parallel_for(K - 1, opts.jobs, [&](std::size_t i) {
    const std::size_t k = i + 1;
    PowerEntry e;
    e.k = k;
    e.poly = k == 1 ? a.poly : min_poly_of_power(a.poly, k);
    if (boyd_all) {
      e.status.kind = StatusKind::NonParry;
      e.status.criterion = Criterion::Boyd;
      e.status.tail = abs(e.poly.coeff(0));
    } else {
      PerronAnalysis ak = k == 1 ? a : analyze_power(snap, k);
      e.status = power_status(ak, opts);
    }
    r.per_power[i] = std::move(e);
  });
  assemble(r);
  return r;
}

DivisionCheck order_division_check(const SpectrumReport& report, std::size_t m, const SpectrumOptions& opts) {
  if (!report.complete()) throw UnknownsPresent("spectrum has undecided powers");
  auto ord = report.ord();
  if (!ord) throw PreconditionViolated("order is infinite");
  if (m == 0 || *ord == 0 || *ord % m != 0) throw PreconditionViolated("m must divide the order");
  DivisionCheck c;
  c.m = m;
  c.expected = *ord / m;
  c.power = parry_spectrum(min_poly_of_power(report.poly, m), opts);
  c.holds = c.power.ord() && *c.power.ord() == c.expected;
  return c;
}

std::string HClass::label() const {
  if (infinite) return "H_inf";
  if (lo == hi) return "H_" + std::to_string(lo);
  return "H_[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

HClass h_class(const SpectrumReport& r) {
  HClass h;
  h.infinite = r.infinite;
  h.lo = r.ord_lo;
  h.hi = r.ord_hi;
  h.totally_real = sturm_count(r.poly, {}) == static_cast<unsigned>(r.poly.degree());
  if (r.tag == NumberTag::Pisot) {
    h.parry = true;
  } else if (!r.per_power.empty() && r.per_power[0].k == 1) {
    const auto& s = r.per_power[0].status;
    if (s.kind != StatusKind::Unknown) h.parry = s.is_parry();
  } else {
    h.parry = false;  // K = 1: Solomyak at the base
  }
  return h;
}

HClass h_class(const IntPolynomial& p, const SpectrumOptions& opts) { return h_class(parry_spectrum(p, opts)); }

}  // namespace parry
