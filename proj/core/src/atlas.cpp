#include "parry/atlas.hpp"

#include "parry/criteria.hpp"
#include "parry/errors.hpp"
#include "parry/factor.hpp"
#include "parry/real_roots.hpp"

namespace parry {

namespace {

void require_d(long d) {
  if (d < 2) throw PreconditionViolated("family index must be at least 2");
}

DigitString theta_expansion(long d) {
  Digits digits(static_cast<std::size_t>(d), 0);
  digits.front() = 1;
  digits.back() = 1;
  return DigitString::finite(std::move(digits));
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::BetaD: return "beta";
    case Family::ThetaD: return "theta";
    case Family::CubicD: return "cubic";
    case Family::GenericCubic: return "generic-cubic";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::Falsified: return "Falsified";
    case Verdict::Unknown: return "Unknown";
    case Verdict::Outside: return "Outside";
  }
  return "?";
}

FamilyMember family_beta(long d) {
  require_d(d);
  FamilyMember m;
  m.family = Family::BetaD;
  m.d = d;
  m.poly = IntPolynomial::monomial(static_cast<std::size_t>(d)) - IntPolynomial{1, 1};
  return m;
}

FamilyMember family_theta(long d) {
  require_d(d);
  FamilyMember m;
  m.family = Family::ThetaD;
  m.d = d;
  const auto n = static_cast<std::size_t>(d);
  m.poly = IntPolynomial::monomial(n) - IntPolynomial::monomial(n - 1) - IntPolynomial::constant(1);
  if (d % 6 == 5) {
    const IntPolynomial c{1, -1, 1};
    auto q = exact_quotient(m.poly, c);
    if (!q) throw std::logic_error("x^2-x+1 does not divide " + m.poly.to_string());
    m.poly = *q;
    m.notes = "divided by x^2-x+1";
  }
  return m;
}

FamilyMember family_cubic(long d) {
  if (d < 1) throw PreconditionViolated("cubic family index must be at least 1");
  FamilyMember m;
  m.family = Family::CubicD;
  m.d = d;
  m.poly = IntPolynomial{d, -2, -d, 1};
  return m;
}

std::vector<HarnessRow> conjecture_harness(Family family, long d_min, long d_max, const SpectrumOptions& opts) {
  if (family != Family::BetaD && family != Family::ThetaD)
    throw PreconditionViolated("the conjecture harness covers the beta and theta families");
  std::vector<HarnessRow> rows;
  for (long d = std::max(2L, d_min); d <= d_max; ++d) {
    HarnessRow row;
    row.member = family == Family::BetaD ? family_beta(d) : family_theta(d);
    PerronAnalysis a = analyze(row.member.poly);
    row.report = parry_spectrum(a, opts);
    row.beta = a.beta_enclosure().center.re.to_string(4);
    if (a.gamma) row.gamma = a.gamma_enclosure().to_string();
    const SpectrumReport& r = row.report;
    if (r.infinite) {
      row.verdict = Verdict::Outside;
      row.detail = to_string(r.tag);
    } else if (!r.complete()) {
      row.verdict = Verdict::Unknown;
      row.detail = "undecided powers remain";
    } else if (family == Family::BetaD) {
      row.verdict = r.spec.empty() ? Verdict::Confirmed : Verdict::Falsified;
      row.detail = r.spec.empty() ? "non-Parry for k >= 1" : "Parry powers " + r.spec_string();
    } else {
      const bool base_ok = !r.per_power.empty() && r.per_power[0].status.kind == StatusKind::SimpleParry &&
                           r.per_power[0].status.digits == theta_expansion(d);
      const bool rest_ok = r.spec.size() == 1 && r.spec[0] == 1;
      row.verdict = base_ok && rest_ok ? Verdict::Confirmed : Verdict::Falsified;
      row.detail = base_ok && rest_ok ? "non-Parry for k >= 2" : "spectrum " + r.spec_string();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

DigitString cubic_closed_form(long a, long b, long c) {
  if (c < 0 || c > a || b < 1 || b > a - 1)
    throw ConstraintViolated("need 0 <= c <= a and 1 <= b <= a-1");
  const IntPolynomial p{c, -b, -a, 1};
  if (!is_irreducible(p)) throw ConstraintViolated("x^3-ax^2-bx+c is reducible: " + p.to_string());
  return DigitString({mpz_class(a)}, {mpz_class(b - 1), mpz_class(a - c)});
}

std::optional<std::vector<std::size_t>> cubic_family_expected(long d) {
  if (d < 1 || d > 100) return std::nullopt;
  long top;
  if (d % 2 == 1)
    top = d <= 9 ? d : d <= 63 ? d - 2 : d - 4;
  else
    top = d <= 36 ? d - 1 : d <= 90 ? d - 3 : d - 5;
  std::vector<std::size_t> out;
  for (long k = 1; k <= top; k += 2) out.push_back(static_cast<std::size_t>(k));
  return out;
}

std::vector<CubicFamilyRow> cubic_family_spectrum(long d_min, long d_max, const SpectrumOptions& opts) {
  std::vector<CubicFamilyRow> rows;
  for (long d = std::max(1L, d_min); d <= d_max; ++d) {
    CubicFamilyRow row;
    row.d = d;
    row.poly = family_cubic(d).poly;
    if (!is_irreducible(row.poly)) {
      row.reducible = true;
      rows.push_back(std::move(row));
      continue;
    }
    row.report = parry_spectrum(row.poly, opts);
    row.expected = cubic_family_expected(d);
    row.matches = row.report.complete() && row.expected && row.report.spec == *row.expected;
    row.all_odd = true;
    for (std::size_t k : row.report.spec)
      if (k % 2 == 0) row.all_odd = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* to_string(CubicCase c) {
  switch (c) {
    case CubicCase::Pisot: return "Pisot";
    case CubicCase::ComplexPairOutside: return "ComplexPairOutside";
    case CubicCase::TotallyRealCase2: return "TotallyReal-case2";
    case CubicCase::TotallyRealCase3: return "TotallyReal-case3";
    case CubicCase::TotallyRealCase4: return "TotallyReal-case4";
  }
  return "?";
}

std::string CubicLabel::to_string() const {
  std::string s = parry::to_string(kind);
  switch (kind) {
    case CubicCase::Pisot: return s + " (Ord=inf)";
    case CubicCase::TotallyRealCase2: return s + (solomyak ? " (Solomyak, Ord=0)" : " (candidate)");
    default: return s + " (Ord=0)";
  }
}

CubicLabel cubic_classify(const IntPolynomial& p) {
  if (p.degree() != 3) throw NotCubic("not a cubic: " + p.to_string());
  PerronAnalysis a = analyze(p);
  if (a.tag == NumberTag::NotPerron) throw NotPerron("not a Perron polynomial: " + a.poly.to_string());
  CubicLabel out;
  if (a.tag == NumberTag::Pisot) return out;
  const IntPolynomial& q = a.poly;
  if (sturm_count(q, {}) < 3) {
    out.kind = CubicCase::ComplexPairOutside;
    return out;
  }
  // +-1 are not roots of an irreducible cubic.
  const unsigned below = sturm_count(q, {std::nullopt, mpq_class(-1)});
  const unsigned inside = sturm_count(q, {mpq_class(-1), mpq_class(1)});
  if (below == 1 && inside == 1) {
    out.kind = CubicCase::TotallyRealCase2;
    out.solomyak = solomyak_test(a).non_parry();
  } else if (inside == 1) {
    out.kind = CubicCase::TotallyRealCase3;
  } else {
    out.kind = CubicCase::TotallyRealCase4;
  }
  return out;
}

}  // namespace parry
