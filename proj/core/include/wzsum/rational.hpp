#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wzsum {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
///
/// Text form is "p/q", or "p" when q == 1, with a leading '-' on the
/// numerator for negative values. `Rational::parse(x.str()) == x` holds for
/// every value.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of the scalar field
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) : value_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// Integer value as a machine integer; throws std::range_error when the
  /// value is not an integer or does not fit.
  long to_long() const;

  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws ZeroDivisionError when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);
Rational inverse(const Rational& x);
/// x^e for any integer e; negative exponents invert (ZeroDivisionError on 0).
Rational pow(const Rational& x, long e);
/// (-1)^e.
Rational sign_power(long e);
Rational factorial(long n);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace wzsum
