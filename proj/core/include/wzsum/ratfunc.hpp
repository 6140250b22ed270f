#pragma once

#include <string>

#include "wzsum/poly.hpp"

namespace wzsum {

/// Canonical rational function num/den over Q[n, k, j, alpha, beta, s, t, p].
///
/// num and den are coprime and den is monic under GrlexGreater, so two
/// RatFuncs are equal as functions iff they are equal as data; the zero
/// function is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const MultiPoly& num) : num_(num), den_(1) { normalize(); }  // NOLINT
  RatFunc(const Rational& c) : RatFunc(MultiPoly(c)) {}                // NOLINT
  RatFunc(long c) : RatFunc(MultiPoly(c)) {}                           // NOLINT
  /// Throws ZeroDivisionError("zero denominator expression") when den is 0.
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc pow(long e) const;
  RatFunc shifted(Var v, const Rational& shift) const;

  /// Exact value; throws PoleError("pole at assignment") when den vanishes.
  Rational evaluate(const Assignment& values) const;

  /// "(num)/(den)" or "num"; parseable by parse_expr.
  std::string str() const;

 private:
  void normalize();
  void make_den_monic();
  void cancel_within(MultiPoly g);
  MultiPoly num_;
  MultiPoly den_;
};

/// True iff r is the zero rational function (decides a == b via a - b).
inline bool ratfunc_is_zero(const RatFunc& r) { return r.is_zero(); }

}  // namespace wzsum
