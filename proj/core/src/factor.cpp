#include "parry/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

#include "parry/errors.hpp"
#include "parry/roots.hpp"

namespace parry {

namespace {

// Integer pinned by an interval: nullopt when the interval holds no integer,
// `ambiguous` set when it may hold several.
std::optional<mpz_class> pin_integer(const Interval& v, bool& ambiguous) {
  mpz_class lo, hi;
  mpfr_get_z(lo.get_mpz_t(), v.lo().get(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), v.hi().get(), MPFR_RNDD);
  if (lo > hi) return std::nullopt;
  if (lo == hi) return lo;
  ambiguous = true;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Degree sets from distinct-degree factorization mod small primes. A degree k
// can occur for a factor over Z only if it is a subset sum of the local
// factor degrees for every good prime.

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

Poly reduce(const IntPolynomial& f, u64 p) {
  Poly r(static_cast<std::size_t>(f.degree() + 1));
  const mpz_class mp = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_class c = f.coeff(i) % mp;
    if (c < 0) c += mp;
    r[i] = c.get_ui();
  }
  trim(r);
  return r;
}

void rem(Poly& a, const Poly& m, u64 p) {
  const std::size_t dm = m.size() - 1;
  const u64 li = inv(m.back(), p);
  while (a.size() > dm) {
    const u64 q = a.back() * li % p;
    const std::size_t s = a.size() - 1 - dm;
    if (q)
      for (std::size_t i = 0; i <= dm; ++i) a[s + i] = (a[s + i] + (p - q) * m[i]) % p;
    a.pop_back();
    trim(a);
  }
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  rem(r, m, p);
  return r;
}

Poly pgcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    rem(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 li = inv(a.back(), p);
    for (auto& c : a) c = c * li % p;
  }
  return a;
}

Poly pdiv(Poly a, const Poly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  const u64 li = inv(b.back(), p);
  while (a.size() > db) {
    const u64 c = a.back() * li % p;
    const std::size_t s = a.size() - 1 - db;
    q[s] = c;
    if (c)
      for (std::size_t i = 0; i <= db; ++i) a[s + i] = (a[s + i] + (p - c) * b[i]) % p;
    a.pop_back();
  }
  trim(q);
  return q;
}

// Subset sums of the local factor degrees, or empty when p is not usable.
std::vector<bool> local_degree_set(const IntPolynomial& f, u64 p) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  Poly g = reduce(f, p);
  if (g.size() != n + 1) return {};
  Poly dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * i % p);
  trim(dg);
  if (dg.empty() || pgcd(g, dg, p).size() != 1) return {};

  std::vector<std::size_t> degs;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; g.size() > 1; ++i) {
    if (2 * i > g.size() - 1) {
      degs.push_back(g.size() - 1);
      break;
    }
    // h = h^p mod g
    Poly r{1}, b = h;
    for (u64 e = p; e; e >>= 1) {
      if (e & 1) r = mulmod(r, b, g, p);
      if (e > 1) b = mulmod(b, b, g, p);
    }
    h = r;
    Poly t = h;
    t.resize(std::max<std::size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    Poly d = pgcd(g, t, p);
    if (d.size() > 1) {
      for (std::size_t c = 0; c < (d.size() - 1) / i; ++c) degs.push_back(i);
      g = pdiv(g, d, p);
      rem(h, g, p);
    }
  }
  std::vector<bool> sums(n + 1, false);
  sums[0] = true;
  for (std::size_t d : degs)
    for (std::size_t s = n; s >= d; --s)
      if (sums[s - d]) sums[s] = true;
  return sums;
}

// Degrees a factor of the squarefree primitive f over Z may have.
std::vector<bool> degree_set(const IntPolynomial& f) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<bool> allowed(n + 1, true);
  int good = 0;
  for (u64 p = 3; p < 2000 && good < 12; p += 2) {
    bool prime = true;
    for (u64 q = 3; q * q <= p; q += 2)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    auto local = local_degree_set(f, p);
    if (local.empty()) continue;
    ++good;
    std::size_t proper = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      allowed[k] = allowed[k] && local[k];
      if (k > 0 && k < n && allowed[k]) ++proper;
    }
    if (proper == 0) break;
  }
  return allowed;
}

class SubsetSearch {
 public:
  SubsetSearch(const IntPolynomial& s, std::vector<bool> allowed)
      : current_(s), rs_(s, true), alive_(rs_.size(), true), allowed_(std::move(allowed)) {}

  std::vector<IntPolynomial> run() {
    std::vector<IntPolynomial> out;
    std::size_t k = 1;
    for (;;) {
      std::size_t m = 0;
      for (bool a : alive_) m += a;
      if (m == 0) break;
      if (m != allowed_.size() - 1) allowed_ = degree_set(current_);
      while (2 * k <= m && !allowed_[k]) ++k;
      if (2 * k > m) {
        out.push_back(current_);
        break;
      }
      auto hit = search(k);
      if (hit) {
        out.push_back(hit->first);
        for (std::size_t i : hit->second) alive_[i] = false;
        current_ = *exact_quotient(current_, hit->first);
      } else {
        ++k;
      }
    }
    return out;
  }

 private:
  using Hit = std::pair<IntPolynomial, std::vector<std::size_t>>;

  std::optional<Hit> search(std::size_t k) {
    for (;;) {
      moduli_.clear();
      for (std::size_t i = 0; i < rs_.size(); ++i) moduli_.push_back(rs_[i].modulus());
      std::vector<std::vector<std::size_t>> orbits;
      for (std::size_t i = 0; i < rs_.size(); ++i) {
        if (!alive_[i]) continue;
        std::size_t c = rs_[i].conjugate;
        if (c == i)
          orbits.push_back({i});
        else if (c > i)
          orbits.push_back({i, c});
      }
      bool ambiguous = false;
      std::optional<Hit> found;
      std::vector<std::size_t> chosen;
      std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) -> bool {
        if (left == 0) {
          auto f = try_subset(chosen, ambiguous);
          if (f) {
            found = Hit{*f, chosen};
            return true;
          }
          return false;
        }
        for (std::size_t o = start; o < orbits.size(); ++o) {
          if (orbits[o].size() > left) continue;
          for (std::size_t i : orbits[o]) chosen.push_back(i);
          bool done = rec(o + 1, left - orbits[o].size());
          for (std::size_t t = 0; t < orbits[o].size(); ++t) chosen.pop_back();
          if (done) return true;
        }
        return false;
      };
      rec(0, k);
      if (found) return found;
      if (!ambiguous) return std::nullopt;
      rs_.refine();
    }
  }

  std::optional<IntPolynomial> try_subset(const std::vector<std::size_t>& idx, bool& ambiguous) {
    const mpfr_prec_t p = rs_.precision();
    const mpz_class lc = abs(current_.leading());
    // Cheap filter: |lc * prod r| must be a positive integer.
    Interval m = Interval::from_integer(lc, p);
    for (std::size_t i : idx) m = m * moduli_[i];
    bool amb = false;
    auto t = pin_integer(m, amb);
    if (!t && !amb) return std::nullopt;
    if (t && *t == 0) return std::nullopt;

    std::vector<CBox> c;
    c.emplace_back(Interval::from_integer(current_.leading(), p), Interval(p));
    for (std::size_t i : idx) {
      CBox r = rs_[i].box();
      std::vector<CBox> next(c.size() + 1, CBox(p));
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j + 1] = next[j + 1] + c[j];
        next[j] = next[j] - c[j] * r;
      }
      c = std::move(next);
    }
    std::vector<mpz_class> coeffs;
    bool local_amb = amb;
    for (const auto& b : c) {
      bool a = false;
      auto v = pin_integer(b.re, a);
      if (!v && !a) return std::nullopt;
      if (a) {
        local_amb = true;
        continue;
      }
      coeffs.push_back(*v);
    }
    if (local_amb) {
      ambiguous = true;
      return std::nullopt;
    }
    IntPolynomial f = IntPolynomial(coeffs).normalized();
    if (f.degree() != static_cast<long>(idx.size())) return std::nullopt;
    if (!divides(f, current_)) return std::nullopt;
    return f;
  }

  IntPolynomial current_;
  RootSystem rs_;
  std::vector<bool> alive_;
  std::vector<Interval> moduli_;
  std::vector<bool> allowed_;
};

}  // namespace

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  IntPolynomial q = p.normalized();
  if (q.degree() <= 0) return out;
  IntPolynomial c = gcd(q, q.derivative());
  IntPolynomial w = *exact_quotient(q, c);
  IntPolynomial y = *exact_quotient(q.derivative(), c);
  IntPolynomial z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    IntPolynomial g = z.is_zero() ? w : gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = *exact_quotient(w, g);
    y = *exact_quotient(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& s0) {
  IntPolynomial s = s0.normalized();
  std::vector<IntPolynomial> out;
  if (s.degree() <= 0) return out;
  if (s.coeff(0) == 0) {
    out.push_back(IntPolynomial{0, 1});
    s = *exact_quotient(s, IntPolynomial{0, 1});
  }
  if (s.degree() <= 0) return out;
  if (s.degree() == 1) {
    out.push_back(s);
    return out;
  }
  std::vector<bool> allowed = degree_set(s);
  if (std::none_of(allowed.begin() + 1, allowed.end() - 1, [](bool b) { return b; })) {
    out.push_back(s);
    return out;
  }
  auto rest = SubsetSearch(s, std::move(allowed)).run();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<IntPolynomial> factor_bounded(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionViolated("cannot factor the zero polynomial");
  std::vector<IntPolynomial> out;
  mpz_class unit = p.content();
  if (p.leading() < 0) unit = -unit;
  if (unit != 1 || p.degree() == 0) out.push_back(IntPolynomial::constant(unit));
  if (p.degree() == 0) return out;
  std::vector<IntPolynomial> factors;
  for (const auto& [s, mult] : squarefree_decomposition(p))
    for (const auto& f : factor_squarefree(s))
      for (unsigned m = 0; m < mult; ++m) factors.push_back(f);
  std::sort(factors.begin(), factors.end());
  out.insert(out.end(), factors.begin(), factors.end());
  return out;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() <= 0) return false;
  if (p.content() != 1) return false;
  auto f = factor_bounded(p);
  return f.size() == 1;
}

IntPolynomial cyclotomic(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, IntPolynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  IntPolynomial r = IntPolynomial::x_pow_minus_one(n);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) r = *exact_quotient(r, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, r);
  return r;
}

IntPolynomial strip_cyclotomic(const IntPolynomial& p) {
  IntPolynomial q = p;
  const IntPolynomial x{0, 1};
  while (!q.is_zero() && q.coeff(0) == 0) q = *exact_quotient(q, x);
  const long d = q.degree();
  for (unsigned n = 1; d > 0 && n <= static_cast<unsigned>(6 * d + 6); ++n) {
    IntPolynomial c = cyclotomic(n);
    if (c.degree() > q.degree()) continue;
    while (q.degree() >= c.degree()) {
      auto quo = exact_quotient(q, c);
      if (!quo) break;
      q = *quo;
    }
  }
  return q;
}

}  // namespace parry
