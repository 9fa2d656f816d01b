#include "parry/expansion.hpp"

#include <stdexcept>

#include "parry/errors.hpp"
#include "parry/factor.hpp"

namespace parry {

namespace {

// x^n - a_1 x^{n-1} - ... - a_n
IntPolynomial prefix_polynomial(const Digits& a, std::size_t n) {
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t i = 1; i <= n; ++i) c[n - i] = -a[i - 1];
  return IntPolynomial(std::move(c));
}

struct Located {
  IntPolynomial poly;  // companion less powers of x
  BisectedRoot beta;
};

// The companion polynomial is (x^{k+l} - x^k)(1 - f(x)) with f(x) = sum a_i x^-i
// strictly decreasing on (1, inf), so beta is its only root there: negative
// below, positive above.
Located locate(const DigitString& digits) {
  IntPolynomial p = companion_polynomial(digits);
  const IntPolynomial x{0, 1};
  while (p.coeff(0) == 0) p = *exact_quotient(p, x);
  mpq_class lo(1), hi(digits.max_digit() + 1);
  for (;;) {
    mpq_class mid = (lo + hi) / 2;
    int s = p.sign_at(mid);
    if (s > 0) {
      hi = mid;
    } else if (s < 0) {
      lo = mid;
      break;
    } else {
      lo = hi = mid;
      break;
    }
  }
  return Located{p, BisectedRoot(p, lo, hi)};
}

}  // namespace

IntPolynomial companion_polynomial(const DigitString& digits) {
  if (digits.empty()) throw EmptyDigits();
  const std::size_t k = digits.preperiod().size();
  const std::size_t l = digits.period().size();
  Digits all = digits.preperiod();
  all.insert(all.end(), digits.period().begin(), digits.period().end());
  if (l == 0) return prefix_polynomial(all, k);
  return prefix_polynomial(all, k + l) - prefix_polynomial(all, k);
}

bool check_self_admissible(const DigitString& digits) {
  if (digits.empty() || digits.at(1) <= 0) return false;
  const std::size_t k = digits.preperiod().size();
  const std::size_t l = digits.period().size();
  if (digits.preperiod().size() + l == 0) return false;
  for (const auto& d : digits.preperiod())
    if (d < 0) return false;
  for (const auto& d : digits.period())
    if (d < 0) return false;
  const std::size_t shifts = digits.is_finite() ? k : k + l + 1;
  const std::size_t window = digits.is_finite() ? k : k + 2 * l;
  for (std::size_t j = 1; j < shifts; ++j) {
    bool below = false;
    for (std::size_t i = 1; i <= window; ++i) {
      const int c = cmp(digits.at(j + i), digits.at(i));
      if (c > 0) return false;
      if (c < 0) {
        below = true;
        break;
      }
    }
    if (!below) return false;
  }
  return true;
}

ExpansionRoot beta_from_expansion(const DigitString& digits, long factor_limit) {
  if (!check_self_admissible(digits)) throw NotAdmissible("not self-admissible: " + digits.to_string());
  Located loc = locate(digits);
  ExpansionRoot out{digits, companion_polynomial(digits), loc.poly, false, loc.beta};
  if (factor_limit <= 0 || loc.poly.degree() > 8 * factor_limit) return out;
  IntPolynomial q = strip_cyclotomic(loc.poly);
  if (q.degree() > factor_limit) return out;
  std::vector<IntPolynomial> factors;
  for (const auto& f : factor_bounded(q))
    if (f.degree() > 0 && (factors.empty() || factors.back() != f)) factors.push_back(f);
  for (;;) {
    std::vector<const IntPolynomial*> hit;
    for (const auto& f : factors) {
      const int a = f.sign_at(out.beta.lo()), b = f.sign_at(out.beta.hi());
      if (a * b <= 0) hit.push_back(&f);
    }
    if (hit.size() == 1) {
      out.polynomial = *hit[0];
      out.minimal = true;
      return out;
    }
    if (hit.empty()) throw std::logic_error("no factor vanishes at the expansion root");
    out.beta.refine();
  }
}

OrbitOutcome round_trip(const ExpansionRoot& root, std::size_t budget) {
  BisectedRoot beta = root.beta;
  return run_orbit(root.polynomial, beta, budget, nullptr, false);
}

Digits quasi_greedy_digits(const mpq_class& r, std::size_t n) {
  if (r <= 1) throw PreconditionViolated("base must exceed 1");
  Digits out;
  mpq_class x(1);
  while (out.size() < n) {
    mpq_class t = r * x;
    mpz_class d;
    mpz_fdiv_q(d.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    out.push_back(d);
    x = t - d;
    if (x == 0) {
      // Finite greedy expansion: 1 = c_1 .. c_L, quasi-greedy is (c_1 .. c_L - 1)^w.
      Digits block = out;
      block.back() -= 1;
      out.clear();
      while (out.size() < n)
        for (const auto& c : block)
          if (out.size() < n) out.push_back(c);
      return out;
    }
  }
  return out;
}

DensityWitness density_witness(const mpq_class& r, const mpq_class& eps) {
  if (r <= 1) throw PreconditionViolated("density witness needs r > 1");
  if (eps <= 0) throw PreconditionViolated("eps must be positive");
  Digits c = quasi_greedy_digits(r, 64);
  for (std::size_t j = 2;; ++j) {
    if (j > c.size()) c = quasi_greedy_digits(r, 2 * c.size());
    if (c[j - 1] == 0) continue;
    for (std::size_t m = 1; m <= j + 64; ++m) {
      Digits pre(c.begin(), c.begin() + static_cast<long>(j));
      Digits per(c.begin(), c.begin() + static_cast<long>(j - 1));
      pre.insert(pre.end(), m, mpz_class(0));
      per.insert(per.end(), m, mpz_class(0));
      DigitString s(std::move(pre), std::move(per));
      if (s.is_finite() || !check_self_admissible(s)) continue;
      Located loc = locate(s);
      while (loc.beta.hi() - loc.beta.lo() >= eps / 4) loc.beta.refine();
      if (loc.beta.hi() <= r - eps) break;  // f decreases in m
      if (loc.beta.lo() >= r + eps) continue;
      if (loc.beta.lo() <= r - eps || loc.beta.hi() >= r + eps) {
        while (loc.beta.hi() - loc.beta.lo() >= eps / 1024) loc.beta.refine();
        if (loc.beta.lo() <= r - eps || loc.beta.hi() >= r + eps) continue;
      }
      DensityWitness w{beta_from_expansion(s), j, m};
      OrbitOutcome o = round_trip(w.root, 4 * s.length() + 64);
      if (o.status.kind != StatusKind::Parry || !(o.status.digits == s))
        throw std::logic_error("density witness failed its round trip: " + s.to_string());
      return w;
    }
  }
}

}  // namespace parry
