#pragma once

#include "wzsum/binomial.hpp"
#include "wzsum/catalog.hpp"
#include "wzsum/harmonic.hpp"
#include "wzsum/legendre.hpp"

namespace wzsum::sides {

inline Rational C(long n, long k) { return binom_int(n, k); }
inline Rational H(long n) { return harmonic(n, 1); }
inline Rational H2(long n) { return harmonic(n, 2); }
inline Rational sgn(long e) { return sign_power(e); }
inline Rational pow4(long e) { return pow(Rational(4), e); }

/// binom(m, p) for the lower parameter p. A constant integer p keeps the plain
/// value; any other p uses the reflection-scaled form, which keeps both sides of
/// the identities it appears in finite away from integers. Jets may only vary p
/// around 0; the scaling factor is common to both sides, so derivatives of the
/// scaled identity are identities too.
template <Scalar S>
S binom_lower(long m, const S& p) {
  if (is_integral_constant(p)) {
    const long q = constant_part(p).to_long();
    return S(binom_int(m, q));
  }
  if (constant_part(p).is_integer() && !constant_part(p).is_zero())
    throw DomainError("lower-index derivative at a nonzero integer");
  return binom_reflection_scaled(m, p);
}

}  // namespace wzsum::sides
