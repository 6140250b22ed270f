#pragma once

#include <concepts>
#include <string>

#include "wzsum/errors.hpp"
#include "wzsum/jet.hpp"
#include "wzsum/rational.hpp"

namespace wzsum {

/// The two scalar fields every evaluator is written over: plain rationals and
/// second-order jets of rationals.
template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, Jet2>;

inline const Rational& constant_part(const Rational& x) noexcept { return x; }
inline const Rational& constant_part(const Jet2& x) noexcept { return x.value(); }

/// True only for a plain rational that is an integer. Jets always count as
/// perturbed, so callers take the generic branch for them.
inline bool is_integral_constant(const Rational& x) noexcept { return x.is_integer(); }
inline bool is_integral_constant(const Jet2& x) noexcept { return x.is_constant() && x.value().is_integer(); }

/// Integer binomial coefficient binom(n, k) for any integer n (negative n uses
/// the falling-factorial extension); zero for k < 0.
Rational binom_int(long n, long k);

/// binom(s, k) = s (s-1) ... (s-k+1) / k! for integer k >= 0, and 0 for k < 0.
template <Scalar S>
S binom_poly(const S& s, long k) {
  if (k < 0) return S(0);
  if constexpr (std::same_as<S, Rational>) {
    if (s.is_integer() && s.numerator().fits_slong_p()) return binom_int(s.to_long(), k);
  }
  S result(1);
  for (long i = 0; i < k; ++i) result *= s - S(i);
  return result / S(factorial(k));
}

/// binom(b + m, m) = (b+1)(b+2)...(b+m) / m! for m >= 0.
template <Scalar S>
S binom_upper_shift(const S& b, long m) {
  if (m < 0) throw DomainError("binom_upper_shift needs m >= 0");
  S result(1);
  for (long i = 1; i <= m; ++i) result *= b + S(i);
  return result / S(factorial(m));
}

/// psi(s+1) - psi(s-n+1) = sum_{i=0}^{n-1} 1/(s-i). Throws PoleError carrying
/// the offending i when s is one of 0..n-1.
template <Scalar S>
S digamma_diff(const S& s, long n) {
  S total(0);
  for (long i = 0; i < n; ++i) {
    const S d = s - S(i);
    if (constant_part(d).is_zero()) throw PoleError("digamma pole at i=" + std::to_string(i), i);
    total += S(1) / d;
  }
  return total;
}

/// psi'(s+1) - psi'(s-n+1) = -sum_{i=0}^{n-1} 1/(s-i)^2.
template <Scalar S>
S trigamma_diff(const S& s, long n) {
  S total(0);
  for (long i = 0; i < n; ++i) {
    const S d = s - S(i);
    if (constant_part(d).is_zero()) throw PoleError("trigamma pole at i=" + std::to_string(i), i);
    total -= S(1) / (d * d);
  }
  return total;
}

/// binom(m, p) * Gamma(1+p) * Gamma(1-p) = m! / prod_{i=1}^{m} (i - p), for an
/// integer m >= 0 and a (generally non-integer) lower index p.
///
/// The scale factor Gamma(1+p)Gamma(1-p) = pi p / sin(pi p) is even in p with
/// value 1 at p = 0, so an identity that is linear in binom(., p) keeps its
/// value and first p-derivative at p = 0 after scaling by it. Poles at
/// p in {1..m}.
template <Scalar S>
S binom_reflection_scaled(long m, const S& p) {
  if (m < 0) throw DomainError("binom_reflection_scaled needs m >= 0");
  S denom(1);
  for (long i = 1; i <= m; ++i) {
    const S d = S(i) - p;
    if (constant_part(d).is_zero()) throw PoleError("reflection pole at i=" + std::to_string(i), i);
    denom *= d;
  }
  return S(factorial(m)) / denom;
}

}  // namespace wzsum
