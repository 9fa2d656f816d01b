#pragma once

// Eventually periodic digit strings a_1 ... a_k (a_{k+1} ... a_{k+l})^w.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace parry {

using Digits = std::vector<mpz_class>;

class DigitString {
 public:
  DigitString() = default;
  // Canonicalizes on construction: shortest period, preperiod not ending in
  // the period's last digit, an all-zero period folded into a finite string,
  // and trailing zeros of finite strings dropped.
  DigitString(Digits preperiod, Digits period);

  static DigitString finite(Digits digits) { return DigitString(std::move(digits), {}); }

  const Digits& preperiod() const { return pre_; }
  const Digits& period() const { return per_; }
  bool is_finite() const { return per_.empty(); }
  bool empty() const { return pre_.empty() && per_.empty(); }
  std::size_t length() const { return pre_.size() + per_.size(); }

  // a_i for i >= 1 of the infinite sequence (finite strings pad with zeros).
  const mpz_class& at(std::size_t i) const;
  mpz_class max_digit() const;

  // "1 0 1 (0 0 1 0 1 0 0 1 0 1 0 0)^w"; finite strings have no parentheses.
  std::string to_string() const;

  friend bool operator==(const DigitString& a, const DigitString& b) {
    return a.pre_ == b.pre_ && a.per_ == b.per_;
  }

 private:
  Digits pre_;
  Digits per_;
};

// Accepts the canonical format above, also "^ω" and compact single-character
// digits without spaces such as "5(10)^w". Throws ParseError.
DigitString parse_digits(std::string_view text);

}  // namespace parry
