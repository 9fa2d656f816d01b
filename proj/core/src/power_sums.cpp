#include "parry/power_sums.hpp"

#include "parry/errors.hpp"

namespace parry {

std::vector<mpz_class> power_sums(const IntPolynomial& p, std::size_t count) {
  if (!p.is_monic()) throw PreconditionViolated("power_sums requires a monic polynomial: " + p.to_string());
  const long d = p.degree();
  // x^d + c_{d-1} x^{d-1} + ... + c_0; Newton: p_m + c_{d-1} p_{m-1} + ... + m c_{d-m} = 0.
  std::vector<mpz_class> s(count + 1);
  for (std::size_t m = 1; m <= count; ++m) {
    mpz_class acc = 0;
    const long lim = std::min<long>(static_cast<long>(m) - 1, d);
    for (long i = 1; i <= lim; ++i) mpz_addmul(acc.get_mpz_t(), p.coeffs()[d - i].get_mpz_t(), s[m - i].get_mpz_t());
    if (static_cast<long>(m) <= d) acc += static_cast<unsigned long>(m) * p.coeffs()[d - m];
    s[m] = -acc;
  }
  s.erase(s.begin());
  return s;
}

IntPolynomial from_power_sums(const std::vector<mpz_class>& sums, std::size_t degree) {
  // j e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i
  std::vector<mpz_class> e(degree + 1);
  e[0] = 1;
  for (std::size_t j = 1; j <= degree; ++j) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      if (i % 2 == 1)
        mpz_addmul(acc.get_mpz_t(), e[j - i].get_mpz_t(), sums[i - 1].get_mpz_t());
      else
        mpz_submul(acc.get_mpz_t(), e[j - i].get_mpz_t(), sums[i - 1].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), j))
      throw PreconditionViolated("power sums are not those of algebraic integers");
    mpz_divexact_ui(e[j].get_mpz_t(), acc.get_mpz_t(), j);
  }
  // prod (x - r) = sum_j (-1)^j e_j x^{d-j}
  std::vector<mpz_class> c(degree + 1);
  for (std::size_t j = 0; j <= degree; ++j) c[degree - j] = (j % 2 == 0) ? e[j] : mpz_class(-e[j]);
  return IntPolynomial(std::move(c));
}

IntPolynomial resultant_power(const IntPolynomial& a, std::size_t n) {
  if (n == 0) throw PreconditionViolated("power must be positive");
  if (n == 1) return a;
  const std::size_t d = static_cast<std::size_t>(a.degree());
  std::vector<mpz_class> s = power_sums(a, d * n);
  std::vector<mpz_class> q(d);
  for (std::size_t j = 1; j <= d; ++j) q[j - 1] = s[j * n - 1];
  return from_power_sums(q, d);
}

IntPolynomial min_poly_of_power(const IntPolynomial& p, std::size_t n) {
  IntPolynomial r = resultant_power(p, n);
  if (!is_squarefree(r))
    throw DegreeDropped("power " + std::to_string(n) + " of " + p.to_string() +
                        " is not squarefree; input is not a Perron minimal polynomial");
  return r;
}

IntPolynomial pairwise_product_polynomial(const IntPolynomial& p) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<mpz_class> s = power_sums(p, d * d);
  for (auto& v : s) v *= v;
  return from_power_sums(s, d * d);
}

}  // namespace parry
