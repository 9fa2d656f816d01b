#include "parry/orbit.hpp"

#include <unordered_map>

#include "parry/errors.hpp"

namespace parry {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<mpz_class>& v) const {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (const auto& c : v) {
      std::size_t x = mpz_get_ui(c.get_mpz_t()) * 0xff51afd7ed558ccdULL + static_cast<std::size_t>(sgn(c) + 1);
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool is_constant(const std::vector<mpz_class>& v, const mpz_class& n) {
  if (v.empty()) return n == 0;
  if (v[0] != n) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

bool is_zero_vec(const std::vector<mpz_class>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Interval sigma_modulus(const std::vector<mpz_class>& x, const RootEnclosure& g) {
  if (g.real) return abs(evaluate(x, g.real_part()));
  return modulus(evaluate(x, g.box()));
}

}  // namespace

// ---------------------------------------------------------------------------
// BisectedRoot

BisectedRoot::BisectedRoot(IntPolynomial p, mpq_class lo, mpq_class hi)
    : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
  sign_lo_ = p_.sign_at(lo_);
  int sign_hi = p_.sign_at(hi_);
  if (sign_lo_ == 0) {
    hi_ = lo_;
  } else if (sign_hi == 0) {
    lo_ = hi_;
  } else if (sign_lo_ == sign_hi) {
    throw PreconditionViolated("no sign change on the bracketing interval");
  }
  bisect_to(64);
}

void BisectedRoot::bisect_to(mpfr_prec_t bits) {
  mpq_class tol(1);
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  while (hi_ - lo_ > tol) {
    mpq_class mid = (lo_ + hi_) / 2;
    int s = p_.sign_at(mid);
    if (s == 0) {
      lo_ = hi_ = mid;
      break;
    }
    if (s == sign_lo_)
      lo_ = mid;
    else
      hi_ = mid;
  }
  prec_ = bits;
}

Interval BisectedRoot::interval() const {
  const mpfr_prec_t p = prec_ + 64;
  Interval a = Interval::from_rational(lo_, p);
  Interval b = Interval::from_rational(hi_, p);
  return Interval(a.lo(), b.hi());
}

void BisectedRoot::refine() { bisect_to(2 * prec_); }

// ---------------------------------------------------------------------------
// Floors

mpz_class floor_of(const std::vector<mpz_class>& coords, RealRootSource& beta) {
  for (;;) {
    Interval v = evaluate(coords, beta.interval());
    mpz_class lo, hi;
    mpfr_get_z(lo.get_mpz_t(), v.lo().get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), v.hi().get(), MPFR_RNDD);
    if (lo == hi) return lo;
    if (hi == lo + 1 && is_constant(coords, hi)) return hi;
    beta.refine();
  }
}

mpz_class floor_of(const FieldElement& x, RealRootSource& beta) {
  if (auto n = x.is_rational_integer()) return *n;
  for (;;) {
    Interval v = evaluate(x.vec(), beta.interval());
    mpz_class lo, hi;
    mpfr_get_z(lo.get_mpz_t(), v.lo().get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), v.hi().get(), MPFR_RNDD);
    if (lo == hi) return lo;
    beta.refine();
  }
}

// ---------------------------------------------------------------------------
// Status

const char* to_string(StatusKind k) {
  switch (k) {
    case StatusKind::SimpleParry: return "SimpleParry";
    case StatusKind::Parry: return "Parry";
    case StatusKind::NonParry: return "NonParry";
    case StatusKind::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::None: return "None";
    case Criterion::Solomyak: return "Solomyak";
    case Criterion::Boyd: return "Boyd";
    case Criterion::Akiyama: return "Akiyama";
  }
  return "?";
}

std::string ParryStatus::to_string() const {
  switch (kind) {
    case StatusKind::SimpleParry:
    case StatusKind::Parry:
      return std::string(parry::to_string(kind)) + " " + digits.to_string();
    case StatusKind::NonParry: {
      std::string s = std::string("NonParry ") + parry::to_string(criterion);
      if (criterion == Criterion::Akiyama) s += " n=" + std::to_string(akiyama_index);
      if (criterion == Criterion::Boyd) s += " |P(0)|=" + tail.get_str();
      if (criterion == Criterion::Solomyak && !conjugate.empty()) s += " gamma=" + conjugate;
      return s;
    }
    case StatusKind::Unknown:
      return "Unknown budget=" + std::to_string(budget);
  }
  return "?";
}

FieldElement OrbitRecord::state(std::size_t k) const {
  std::vector<mpq_class> v(states.at(k).begin(), states.at(k).end());
  return FieldElement(field, std::move(v));
}

// ---------------------------------------------------------------------------
// Orbit

OrbitOutcome run_orbit(const IntPolynomial& modulus, RealRootSource& beta, std::size_t budget,
                       const AkiyamaScan* akiyama, bool keep_states) {
  if (!modulus.is_monic()) throw PreconditionViolated("orbit modulus must be monic");
  const std::size_t d = static_cast<std::size_t>(modulus.degree());
  OrbitOutcome out;
  out.record.field = make_field(modulus);
  std::vector<mpz_class> x(d, 0);
  x[0] = 1;
  std::unordered_map<std::vector<mpz_class>, std::size_t, VecHash> seen;
  seen.emplace(x, 0);
  if (keep_states) out.record.states.push_back(x);

  mpz_class floor_beta;
  auto akiyama_hit = [&](const std::vector<mpz_class>& state) {
    RootSystem& rs = *akiyama->roots;
    for (;;) {
      const RootEnclosure& g = rs[akiyama->gamma];
      Interval gm = g.modulus();
      if (mpfr_cmp_ui(gm.lo().get(), 1) <= 0) {
        if (rs.precision() >= precision_ceiling()) return false;
        rs.refine();
        continue;
      }
      Interval bound = Interval::from_integer(floor_beta, gm.precision()) / (gm - mpz_class(1));
      Interval s = sigma_modulus(state, g);
      if (certainly_less(bound, s)) return true;
      if (mpfr_lessequal_p(s.hi().get(), bound.lo().get())) return false;
      if (rs.precision() >= precision_ceiling()) return false;
      rs.refine();
    }
  };

  std::vector<mpz_class> y;
  for (std::size_t k = 1; k <= budget; ++k) {
    y.assign(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) y[i + 1] = x[i];
    reduce_mod_monic(y, modulus);
    mpz_class digit = floor_of(y, beta);
    y[0] -= digit;
    x.swap(y);
    out.record.digits.push_back(digit);
    out.record.budget_used = k;
    if (k == 1) {
      floor_beta = digit;
      std::vector<mpz_class> one(d, 0);
      one[0] = 1;
      if (akiyama && akiyama_hit(one)) {
        out.status.kind = StatusKind::NonParry;
        out.status.criterion = Criterion::Akiyama;
        out.status.akiyama_index = 0;
        out.status.conjugate = (*akiyama->roots)[akiyama->gamma].to_string();
        return out;
      }
    }
    if (is_zero_vec(x)) {
      out.record.cycle_start = k;
      if (keep_states) out.record.states.push_back(x);
      out.status.kind = StatusKind::SimpleParry;
      out.status.digits = DigitString::finite(out.record.digits);
      return out;
    }
    auto [it, fresh] = seen.emplace(x, k);
    if (!fresh) {
      const std::size_t j = it->second;
      out.record.cycle_start = j;
      Digits pre(out.record.digits.begin(), out.record.digits.begin() + static_cast<long>(j));
      Digits per(out.record.digits.begin() + static_cast<long>(j), out.record.digits.end());
      out.status.kind = StatusKind::Parry;
      out.status.digits = DigitString(std::move(pre), std::move(per));
      return out;
    }
    if (keep_states) out.record.states.push_back(x);
    if (akiyama && k <= akiyama->budget && akiyama_hit(x)) {
      out.status.kind = StatusKind::NonParry;
      out.status.criterion = Criterion::Akiyama;
      out.status.akiyama_index = k;
      out.status.conjugate = (*akiyama->roots)[akiyama->gamma].to_string();
      return out;
    }
  }
  out.status.kind = StatusKind::Unknown;
  out.status.budget = budget;
  return out;
}

OrbitOutcome greedy_expansion(const PerronAnalysis& a, std::size_t budget) {
  if (a.tag == NumberTag::NotPerron) throw NotPerron("not a Perron polynomial: " + a.poly.to_string());
  SystemRoot beta(a.roots, a.beta);
  return run_orbit(a.poly, beta, budget);
}

OrbitOutcome greedy_expansion(const IntPolynomial& p, std::size_t budget) {
  return greedy_expansion(analyze(p), budget);
}

}  // namespace parry
