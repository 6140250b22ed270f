#include "wzsum/jet.hpp"

#include <ostream>

#include "wzsum/errors.hpp"

namespace wzsum {

Jet2& Jet2::operator+=(const Jet2& rhs) {
  c_ += rhs.c_;
  d1_ += rhs.d1_;
  d2_ += rhs.d2_;
  d11_ += rhs.d11_;
  d12_ += rhs.d12_;
  d22_ += rhs.d22_;
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs) {
  c_ -= rhs.c_;
  d1_ -= rhs.d1_;
  d2_ -= rhs.d2_;
  d11_ -= rhs.d11_;
  d12_ -= rhs.d12_;
  d22_ -= rhs.d22_;
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& rhs) {
  const Jet2 a = *this;
  const Jet2 b = rhs;  // rhs may alias *this
  c_ = a.c_ * b.c_;
  d1_ = a.c_ * b.d1_ + a.d1_ * b.c_;
  d2_ = a.c_ * b.d2_ + a.d2_ * b.c_;
  d11_ = a.c_ * b.d11_ + a.d1_ * b.d1_ + a.d11_ * b.c_;
  d12_ = a.c_ * b.d12_ + a.d1_ * b.d2_ + a.d2_ * b.d1_ + a.d12_ * b.c_;
  d22_ = a.c_ * b.d22_ + a.d2_ * b.d2_ + a.d22_ * b.c_;
  return *this;
}

Jet2 inverse(const Jet2& x) {
  if (x.value().is_zero()) throw PoleError("jet division pole");
  // x = x0 (1 + u) with u nilpotent, so 1/x = (1 - u + u^2) / x0.
  const Rational inv0 = inverse(x.value());
  const Rational u1 = x.d1() * inv0, u2 = x.d2() * inv0;
  const Rational u11 = x.d11() * inv0, u12 = x.d12() * inv0, u22 = x.d22() * inv0;
  return Jet2(inv0, -u1 * inv0, -u2 * inv0, (u1 * u1 - u11) * inv0,
              (Rational(2) * u1 * u2 - u12) * inv0, (u2 * u2 - u22) * inv0);
}

Jet2& Jet2::operator/=(const Jet2& rhs) { return *this *= inverse(rhs); }

Jet2 pow(const Jet2& x, long e) {
  if (e < 0) return inverse(pow(x, -e));
  Jet2 result(1);
  Jet2 base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Jet2::str() const {
  return "[" + c_.str() + "; e1 " + d1_.str() + ", e2 " + d2_.str() + "; e1^2 " + d11_.str() +
         ", e1e2 " + d12_.str() + ", e2^2 " + d22_.str() + "]";
}

std::ostream& operator<<(std::ostream& os, const Jet2& x) { return os << x.str(); }

}  // namespace wzsum
