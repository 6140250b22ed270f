#pragma once

#include <iosfwd>
#include <string>

#include "wzsum/rational.hpp"

namespace wzsum {

/// Truncated Taylor expansion in two nilpotent infinitesimals e1, e2 over the
/// rationals:
///
///   c + d1*e1 + d2*e2 + d11*e1^2 + d12*e1*e2 + d22*e2^2
///
/// Every monomial of total degree > 2 is dropped. Lifting a rational function
/// f(s, t) to Jet2::variable1(s0) / Jet2::variable2(t0) yields the exact
/// Taylor coefficients: d1 = f_s, d11 = f_ss / 2, d12 = f_st, d22 = f_tt / 2.
class Jet2 {
 public:
  Jet2() = default;
  Jet2(const Rational& value) : c_(value) {}  // NOLINT: constants embed implicitly
  Jet2(long value) : c_(value) {}             // NOLINT
  Jet2(Rational c, Rational d1, Rational d2, Rational d11, Rational d12, Rational d22)
      : c_(std::move(c)),
        d1_(std::move(d1)),
        d2_(std::move(d2)),
        d11_(std::move(d11)),
        d12_(std::move(d12)),
        d22_(std::move(d22)) {}

  /// base + e1
  static Jet2 variable1(const Rational& base) { return {base, 1, 0, 0, 0, 0}; }
  /// base + e2
  static Jet2 variable2(const Rational& base) { return {base, 0, 1, 0, 0, 0}; }

  const Rational& value() const noexcept { return c_; }
  const Rational& d1() const noexcept { return d1_; }
  const Rational& d2() const noexcept { return d2_; }
  const Rational& d11() const noexcept { return d11_; }
  const Rational& d12() const noexcept { return d12_; }
  const Rational& d22() const noexcept { return d22_; }

  bool is_constant() const noexcept {
    return d1_.is_zero() && d2_.is_zero() && d11_.is_zero() && d12_.is_zero() && d22_.is_zero();
  }

  std::string str() const;

  Jet2& operator+=(const Jet2& rhs);
  Jet2& operator-=(const Jet2& rhs);
  Jet2& operator*=(const Jet2& rhs);
  /// Throws PoleError("jet division pole") when rhs has a zero constant term.
  Jet2& operator/=(const Jet2& rhs);

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
  friend Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
  friend Jet2 operator-(const Jet2& a) {
    return {-a.c_, -a.d1_, -a.d2_, -a.d11_, -a.d12_, -a.d22_};
  }
  friend bool operator==(const Jet2&, const Jet2&) = default;

 private:
  Rational c_, d1_, d2_, d11_, d12_, d22_;
};

/// Series inverse to order 2.
Jet2 inverse(const Jet2& x);
Jet2 pow(const Jet2& x, long e);

std::ostream& operator<<(std::ostream& os, const Jet2& x);

}  // namespace wzsum
