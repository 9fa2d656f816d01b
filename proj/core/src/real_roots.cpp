#include "parry/real_roots.hpp"

#include "parry/errors.hpp"

namespace parry {

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  IntPolynomial s = squarefree_part(p);
  if (s.is_zero()) return seq;
  seq.push_back(s);
  if (s.degree() == 0) return seq;
  seq.push_back(s.derivative().primitive_part());
  while (true) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    if (b.degree() == 0) break;
    // rem over Q, negated; only positive rescaling keeps the chain valid.
    auto [q, r] = divrem(a, b);
    if (r.is_zero()) break;
    IntPolynomial next = (-r.to_primitive_integer());
    seq.push_back(std::move(next));
  }
  return seq;
}

namespace {

int sign_at_infinity(const IntPolynomial& p, bool positive) {
  int s = sgn(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

unsigned variations(const std::vector<IntPolynomial>& seq, const std::optional<mpq_class>& x, bool plus_inf) {
  unsigned v = 0;
  int last = 0;
  for (const auto& f : seq) {
    int s = x ? f.sign_at(*x) : sign_at_infinity(f, plus_inf);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

unsigned sturm_count(const IntPolynomial& p, const OpenInterval& interval) {
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return 0;
  auto seq = sturm_sequence(p);
  if (seq.empty() || seq.front().degree() <= 0) return 0;
  // V(a) - V(b) counts roots in (a, b] for squarefree chains.
  unsigned va = variations(seq, interval.lo, false);
  unsigned vb = variations(seq, interval.hi, true);
  unsigned count = va - vb;
  if (interval.hi && seq.front().sign_at(*interval.hi) == 0) --count;
  return count;
}

bool self_reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  IntPolynomial r = p.reversed();
  // A factor x^k changes the degree of the reversal; such P are not reciprocal.
  if (r.degree() != p.degree()) return false;
  return r == p || r == -p;
}

namespace {

// V_j(y) with x^j + x^{-j} = V_j(x + 1/x): V_0 = 2, V_1 = y, V_{j+1} = y V_j - V_{j-1}.
std::vector<IntPolynomial> dickson_table(std::size_t m) {
  std::vector<IntPolynomial> v;
  v.push_back(IntPolynomial{2});
  if (m >= 1) v.push_back(IntPolynomial{0, 1});
  IntPolynomial y{0, 1};
  for (std::size_t j = 2; j <= m; ++j) v.push_back(y * v[j - 1] - v[j - 2]);
  return v;
}

}  // namespace

IntPolynomial chebyshev_reduce(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() % 2 != 0 || p.reversed() != p)
    throw NotReciprocal("not an even-degree self-reciprocal polynomial: " + p.to_string());
  const std::size_t m = static_cast<std::size_t>(p.degree() / 2);
  auto v = dickson_table(m);
  IntPolynomial q = IntPolynomial::constant(p.coeff(m));
  for (std::size_t j = 1; j <= m; ++j) q += v[j] * p.coeff(m + j);
  return q;
}

IntPolynomial chebyshev_expand(const IntPolynomial& q) {
  // x^m Q(x + 1/x) = sum_k q_k (x^2 + 1)^k x^{m-k}
  const std::size_t m = static_cast<std::size_t>(std::max<long>(q.degree(), 0));
  IntPolynomial out;
  IntPolynomial base{1, 0, 1};
  IntPolynomial power{1};
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) power = power * base;
    if (q.coeff(k) != 0) out += IntPolynomial::monomial(m - k, q.coeff(k)) * power;
  }
  return out;
}

}  // namespace parry
