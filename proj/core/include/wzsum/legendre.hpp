#pragma once

#include <utility>

#include "wzsum/binomial.hpp"
#include "wzsum/rational.hpp"

namespace wzsum {

/// P_n(x) from (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}.
template <Scalar S>
S legendre(long n, const S& x) {
  if (n < 0) throw DomainError("legendre degree must be non-negative");
  S prev(1);
  if (n == 0) return prev;
  S cur = x;
  for (long m = 1; m < n; ++m) {
    S next = (S(2 * m + 1) * x * cur - S(m) * prev) / S(m + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// binom(2k, k), memoized (thread-safe).
const Rational& central_binomial(long k);

template <Scalar S>
void require_nonzero_t(const S& t) {
  if (constant_part(t).is_zero()) throw DomainError("t must be nonzero");
}

/// (t^2 + 1) / (2t), the argument at which the t-representations evaluate P_n.
template <Scalar S>
S legendre_argument(const S& t) {
  require_nonzero_t(t);
  return (t * t + S(1)) / (S(2) * t);
}

/// (1/4^n) sum_k binom(2k,k) binom(2n-2k,n-k) t^{2k}; equals t^n P_n((t^2+1)/(2t)).
template <Scalar S>
S legendre_product_form(long n, const S& t) {
  require_nonzero_t(t);
  const S t2 = t * t;
  S total(0);
  S power(1);
  for (long k = 0; k <= n; ++k) {
    total += S(central_binomial(k) * central_binomial(n - k)) * power;
    power *= t2;
  }
  return total / S(pow(Rational(4), n));
}

/// t^{-n} sum_k binom(n,k) binom(2k,k) ((t^2-1)/4)^k; equals P_n((t^2+1)/(2t)).
template <Scalar S>
S legendre_new_repr(long n, const S& t) {
  require_nonzero_t(t);
  const S u = (t * t - S(1)) / S(4);
  S total(0);
  S power(1);
  for (long k = 0; k <= n; ++k) {
    total += S(binom_int(n, k) * central_binomial(k)) * power;
    power *= u;
  }
  return total / pow(t, n);
}

/// sum_k (-1)^k binom(n,k) P_k((t^2+1)/(2t)) t^k with P_k by recurrence.
template <Scalar S>
S legendre_inversion_lhs(long n, const S& t) {
  const S x = legendre_argument(t);
  S total(0);
  S prev(1), cur = x;  // P_{k-1}, P_k for k = 1
  S tk(1);
  for (long k = 0; k <= n; ++k) {
    const S pk = k == 0 ? S(1) : cur;
    total += S(sign_power(k) * binom_int(n, k)) * pk * tk;
    tk *= t;
    if (k >= 1) {
      S next = (S(2 * k + 1) * x * cur - S(k) * prev) / S(k + 1);
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return total;
}

/// binom(2n,n) ((1-t^2)/4)^n.
template <Scalar S>
S legendre_inversion_rhs(long n, const S& t) {
  require_nonzero_t(t);
  return S(central_binomial(n)) * pow((S(1) - t * t) / S(4), n);
}

struct SidePair {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the binomial-inverted representation, computed independently.
inline SidePair legendre_inversion_check(long n, const Rational& t) {
  return {legendre_inversion_lhs(n, t), legendre_inversion_rhs(n, t)};
}

}  // namespace wzsum
