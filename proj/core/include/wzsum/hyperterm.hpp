#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wzsum/ratfunc.hpp"

namespace wzsum {

/// constant + sum_v coeff_v * v, with integer variable coefficients so that a
/// unit shift of any variable moves the form by an integer.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(const Rational& constant) : constant_(constant) {}  // NOLINT
  AffineForm(long constant) : constant_(constant) {}             // NOLINT

  /// Throws std::invalid_argument when p is not of degree <= 1 and
  /// NonHypergeometricError when a variable coefficient is not an integer.
  static AffineForm from_poly(const MultiPoly& p);
  /// Parses with the expression grammar, then from_poly.
  static AffineForm parse(std::string_view text);

  const Rational& constant() const noexcept { return constant_; }
  long coefficient(Var v) const;
  const std::map<Var, long>& coefficients() const noexcept { return coeffs_; }

  MultiPoly to_poly() const;
  Rational evaluate(const Assignment& values) const;
  std::string str() const;

  AffineForm& operator+=(const AffineForm& rhs);
  AffineForm& operator-=(const AffineForm& rhs);
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  Rational constant_;
  std::map<Var, long> coeffs_;  // no zero entries
};

/// binom(top, bottom)^exponent with exponent in {+1, -1}.
struct BinomialFactor {
  AffineForm top;
  AffineForm bottom;
  int exponent = 1;

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

/// constant * (-1)^sign_exponent * prod binom(top_i, bottom_i)^{e_i}.
///
/// Binomials follow the Gamma-function definition. At concrete points a factor
/// with integer lower argument is evaluated in product form (0 for a negative
/// lower argument); factors with non-integer lower argument are expanded into
/// Gamma values, which are then cancelled class by class (arguments differing
/// by integers) into finite rising products.
class HyperTerm {
 public:
  HyperTerm() = default;
  HyperTerm(Rational constant, AffineForm sign_exponent, std::vector<BinomialFactor> factors);

  const Rational& constant() const noexcept { return constant_; }
  const AffineForm& sign_exponent() const noexcept { return sign_; }
  const std::vector<BinomialFactor>& factors() const noexcept { return factors_; }
  std::vector<BinomialFactor>& mutable_factors() noexcept { return factors_; }

  /// Exact value. Throws PoleError when a factor in a denominator vanishes
  /// (or zeros and poles meet), MathError when the Gamma values do not cancel
  /// to a rational.
  Rational evaluate(const Assignment& values) const;

  /// T(v+1)/T(v) as a canonical rational function, via
  /// Gamma(x+m)/Gamma(x) = x (x+1) ... (x+m-1).
  RatFunc shift_ratio(Var v) const;

  /// "sign(n + k) * 1 * prod binom(beta + k, k)^1 ..." (certificate syntax).
  std::string str() const;

 private:
  Rational constant_{1};
  AffineForm sign_;
  std::vector<BinomialFactor> factors_;
};

/// Free-function spelling of HyperTerm::shift_ratio.
inline RatFunc shift_ratio(const HyperTerm& t, Var v) { return t.shift_ratio(v); }

}  // namespace wzsum
