#include "wzsum/binomial.hpp"
#include "wzsum/crosscheck.hpp"

namespace wzsum {

TaylorRoute taylor_route(long n, const Rational& alpha, const Rational& beta) {
  TaylorRoute out;
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) c[k] = binom_poly(alpha, n - k) * binom_poly(beta + Rational(k), k);

  // Horner shift: after pass j, c[j] is the coefficient of (x+1)^j.
  for (long j = 0; j <= n; ++j)
    for (long k = n - 1; k >= j; --k) c[k] -= c[k + 1];
  out.shifted = std::move(c);

  out.ok = true;
  for (long j = 0; j <= n; ++j) {
    out.expected.push_back(sign_power(n + j) * binom_poly(beta + Rational(j), j) *
                           binom_poly(beta - alpha + Rational(n), n - j));
    out.ok = out.ok && out.expected.back() == out.shifted[j];
  }
  return out;
}

bool taylor_route_check(long n, const Rational& alpha, const Rational& beta) {
  return taylor_route(n, alpha, beta).ok;
}

}  // namespace wzsum
