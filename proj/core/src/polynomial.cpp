#include "parry/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parry/errors.hpp"

namespace parry {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<mpz_class> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPolynomial::leading() const {
  static const mpz_class zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (g == 1) return *this;
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::normalized() const {
  IntPolynomial p = primitive_part();
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return p;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<mpz_class> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::negated_variable() const {
  std::vector<mpz_class> v = coeffs_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  if (is_zero()) return 0;
  // Homogenized Horner over the numerator/denominator to stay in Z.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc = den^deg * P(x); den_pow overshoots by one factor of den.
  mpq_class r(acc, den_pow / den);
  r.canonicalize();
  return r;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  mpq_class v = evaluate(x);
  return sgn(v);
}

RatPolynomial IntPolynomial::to_rational() const {
  std::vector<mpq_class> v(coeffs_.begin(), coeffs_.end());
  return RatPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

template <class T>
std::string format_poly(const std::vector<T>& coeffs, char var) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const T& c = coeffs[k];
    if (c == 0) continue;
    bool neg = c < 0;
    T mag = neg ? T(-c) : c;
    if (neg)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace

std::string IntPolynomial::to_string(char var) const { return format_poly(coeffs_, var); }

// ---------------------------------------------------------------------------
// RatPolynomial

RatPolynomial::RatPolynomial(std::vector<mpq_class> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RatPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

const mpq_class& RatPolynomial::leading() const {
  static const mpq_class zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  return *this * mpq_class(1 / leading());
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPolynomial(std::move(v));
}

mpq_class RatPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial RatPolynomial::to_primitive_integer() const {
  if (is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class t = l / coeffs_[i].get_den();
    v[i] = coeffs_[i].get_num() * t;
  }
  return IntPolynomial(std::move(v)).primitive_part();
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(RatPolynomial a, const mpq_class& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::string RatPolynomial::to_string(char var) const { return format_poly(coeffs_, var); }

// ---------------------------------------------------------------------------
// Division and gcd

std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<mpq_class> r = a.coeffs();
  std::vector<mpq_class> q(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  const mpq_class& lb = b.leading();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    mpq_class t = r[k + b.degree()] / lb;
    q[k] = t;
    if (t == 0) continue;
    for (long j = 0; j <= b.degree(); ++j) r[k + j] -= t * bc[j];
  }
  r.resize(b.degree() > 0 ? b.degree() : 0);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

std::pair<RatPolynomial, RatPolynomial> divrem(const IntPolynomial& a, const IntPolynomial& b) {
  return divrem(a.to_rational(), b.to_rational());
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    mpz_class& top = r[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[k] = t;
    for (long j = 0; j <= b.degree(); ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (long i = 0; i < b.degree(); ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& a) { return exact_quotient(a, divisor).has_value(); }

namespace {

// lc(b)^k * a mod b in Z[x], up to a positive or negative scalar.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const mpz_class lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    mpz_class la = a.leading();
    IntPolynomial shifted = IntPolynomial::monomial(a.degree() - b.degree(), la) * b;
    a *= lb;
    a -= shifted;
  }
  return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.normalized();
  IntPolynomial y = b.normalized();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  IntPolynomial g = gcd(a.to_primitive_integer(), b.to_primitive_integer());
  return g.to_rational().monic();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial n = p.normalized();
  if (n.degree() <= 0) return n;
  IntPolynomial g = gcd(n, n.derivative());
  if (g.degree() == 0) return n;
  auto q = exact_quotient(n, g);
  // The primitive gcd always divides the primitive input.
  return q->normalized();
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  IntPolynomial parse() {
    if (text_.empty()) throw ParseError("empty polynomial");
    if (text_.front() == '[') return parse_list();
    return parse_symbolic();
  }

 private:
  IntPolynomial parse_list() {
    if (text_.back() != ']') throw ParseError("unterminated coefficient list: " + text_);
    std::string body = text_.substr(1, text_.size() - 2);
    std::vector<mpz_class> desc;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok.empty()) throw ParseError("empty coefficient in list: " + text_);
      desc.push_back(parse_integer(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::reverse(desc.begin(), desc.end());
    return IntPolynomial(std::move(desc));
  }

  static mpz_class parse_integer(const std::string& tok) {
    std::size_t i = 0;
    if (tok[0] == '+' || tok[0] == '-') i = 1;
    if (i == tok.size()) throw ParseError("bad integer: " + tok);
    for (std::size_t j = i; j < tok.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(tok[j]))) throw ParseError("bad integer: " + tok);
    mpz_class v(tok.substr(tok[0] == '+' ? 1 : 0));
    return v;
  }

  IntPolynomial parse_symbolic() {
    std::vector<mpz_class> coeffs;
    std::size_t i = 0;
    char var = 0;
    bool first = true;
    while (i < text_.size()) {
      int sign = 1;
      if (text_[i] == '+' || text_[i] == '-') {
        sign = text_[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        throw ParseError("expected '+' or '-' at position " + std::to_string(i) + ": " + text_);
      }
      first = false;
      std::string digits;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) digits.push_back(text_[i++]);
      mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
      std::size_t exponent = 0;
      if (i < text_.size() && text_[i] == '*') {
        if (digits.empty()) throw ParseError("dangling '*': " + text_);
        ++i;
      }
      if (i < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i]))) {
        if (var == 0) var = text_[i];
        if (text_[i] != var) throw ParseError("mixed variables in: " + text_);
        ++i;
        exponent = 1;
        if (i < text_.size() && text_[i] == '^') {
          ++i;
          std::string e;
          while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) e.push_back(text_[i++]);
          if (e.empty()) throw ParseError("missing exponent: " + text_);
          exponent = std::stoul(e);
        }
      } else if (digits.empty()) {
        throw ParseError("expected a term at position " + std::to_string(i) + ": " + text_);
      }
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
      coeffs[exponent] += sign * c;
    }
    return IntPolynomial(std::move(coeffs));
  }

  std::string text_;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace parry
