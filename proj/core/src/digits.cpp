#include "parry/digits.hpp"

#include <algorithm>
#include <cctype>

#include "parry/errors.hpp"

namespace parry {

namespace {

bool all_zero(const Digits& d) {
  return std::all_of(d.begin(), d.end(), [](const mpz_class& x) { return x == 0; });
}

Digits shortest_period(const Digits& p) {
  const std::size_t n = p.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = p[i] == p[i - len];
    if (ok) return Digits(p.begin(), p.begin() + static_cast<long>(len));
  }
  return p;
}

}  // namespace

DigitString::DigitString(Digits preperiod, Digits period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (!per_.empty() && all_zero(per_)) per_.clear();
  if (per_.empty()) {
    while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
    return;
  }
  per_ = shortest_period(per_);
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

const mpz_class& DigitString::at(std::size_t i) const {
  static const mpz_class zero(0);
  if (i == 0) return zero;
  if (i <= pre_.size()) return pre_[i - 1];
  if (per_.empty()) return zero;
  return per_[(i - 1 - pre_.size()) % per_.size()];
}

mpz_class DigitString::max_digit() const {
  mpz_class m = 0;
  for (const auto& d : pre_) m = std::max(m, d);
  for (const auto& d : per_) m = std::max(m, d);
  return m;
}

std::string DigitString::to_string() const {
  std::string s;
  auto append = [&s](const mpz_class& d) {
    if (!s.empty() && s.back() != '(') s += ' ';
    s += d.get_str();
  };
  for (const auto& d : pre_) append(d);
  if (!per_.empty()) {
    if (!s.empty()) s += ' ';
    s += '(';
    for (const auto& d : per_) append(d);
    s += ")^w";
  }
  return s;
}

DigitString parse_digits(std::string_view text) {
  std::string t(text);
  for (const std::string& omega : {std::string("^ω"), std::string("^\\omega"), std::string("^omega")}) {
    std::size_t pos;
    while ((pos = t.find(omega)) != std::string::npos) t.replace(pos, omega.size(), "^w");
  }
  std::string body = t;
  std::string periodic;
  bool has_period = false;
  // The period is the last balanced group, followed only by ^w.
  std::size_t last = t.find_last_not_of(" \t");
  if (last != std::string::npos && last >= 2 && t.compare(last - 1, 2, "^w") == 0) {
    std::size_t close = t.find_last_not_of(" \t", last - 2);
    if (close == std::string::npos || t[close] != ')') throw ParseError("period must be parenthesized: " + t);
    int depth = 0;
    std::size_t open = std::string::npos;
    for (std::size_t i = close + 1; i-- > 0;) {
      if (t[i] == ')') ++depth;
      if (t[i] == '(' && --depth == 0) {
        open = i;
        break;
      }
    }
    if (open == std::string::npos) throw ParseError("unbalanced parenthesis in digit string: " + t);
    body = t.substr(0, open);
    periodic = t.substr(open + 1, close - open - 1);
    has_period = true;
  } else if (t.find("^w") != std::string::npos) {
    throw ParseError("period must be followed by ^w: " + t);
  }

  // Tokens: a parenthesized group is one digit; otherwise whitespace-separated
  // numbers when any segment has inner spaces, single characters when not.
  auto strip_groups = [](const std::string& s) {
    std::string out;
    int depth = 0;
    for (char c : s) {
      if (c == '(') ++depth;
      if (depth == 0) out += c;
      if (c == ')') --depth;
    }
    return out;
  };
  auto has_inner_space = [](const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return false;
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1).find_first_of(" \t") != std::string::npos;
  };
  const bool spaced = has_inner_space(strip_groups(body)) || has_inner_space(strip_groups(periodic));

  auto tokenize = [&](const std::string& s) {
    Digits out;
    auto number = [&](const std::string& tok) {
      if (tok.empty()) throw ParseError("empty digit group in: " + t);
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad digit token '" + tok + "'");
      out.emplace_back(tok);
    };
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(') {
        std::size_t j = s.find(')', i);
        if (j == std::string::npos) throw ParseError("unbalanced parenthesis in digit string: " + t);
        std::string tok = s.substr(i + 1, j - i - 1);
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
        number(tok);
        i = j + 1;
      } else if (c == ')') {
        throw ParseError("unbalanced parenthesis in digit string: " + t);
      } else if (spaced) {
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(') ++j;
        number(s.substr(i, j - i));
        i = j;
      } else {
        number(std::string(1, c));
        ++i;
      }
    }
    return out;
  };
  Digits pre = tokenize(body);
  Digits per = tokenize(periodic);
  if (has_period && per.empty()) throw ParseError("empty period in: " + t);
  if (pre.empty() && per.empty()) throw ParseError("empty digit string");
  return DigitString(std::move(pre), std::move(per));
}

}  // namespace parry
