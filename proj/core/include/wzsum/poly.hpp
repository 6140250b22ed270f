#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wzsum/rational.hpp"

namespace wzsum {

/// Polynomial variables, in the fixed global order used by every monomial
/// comparison and every rendering.
enum class Var : std::uint8_t { n, k, j, alpha, beta, s, t, p };
inline constexpr std::size_t kNumVars = 8;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over the variables in Var order.
using Monomial = std::array<std::uint16_t, kNumVars>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// break on the exponent of n, then k, j, alpha, beta, s, t, p.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Values for variables; evaluation fails on a variable that is used but
/// unassigned.
using Assignment = std::map<std::string, Rational, std::less<>>;

/// Sparse multivariate polynomial over the rationals. Zero coefficients are
/// never stored; the zero polynomial has no terms. Terms iterate in
/// GrlexGreater order, so begin() is the leading term.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants embed implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Monomial& m, const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (0 when absent).
  Rational constant_term() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }

  const Monomial& leading_monomial() const;  // requires !is_zero()
  const Rational& leading_coefficient() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned e) const;

  /// Substitute `v -> v + shift`.
  MultiPoly shifted(Var v, const Rational& shift) const;
  /// Substitute `v -> replacement`.
  MultiPoly substitute(Var v, const MultiPoly& replacement) const;

  Rational evaluate(const Assignment& values) const;

  /// Coefficients with respect to v: result[e] is the coefficient of v^e, a
  /// polynomial free of v.
  std::map<int, MultiPoly> coefficients_in(Var v) const;

  /// "3/2*n^2*k - alpha + 1"; parseable by parse_expr.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Exact quotient a / b; throws std::invalid_argument when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor over Q[vars], normalized to leading coefficient 1
/// (the zero polynomial when both inputs are zero). Computed by
/// content/primitive-part recursion on the fixed variable order with a
/// primitive pseudo-remainder sequence in the main variable.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Scale by 1/leading_coefficient (zero stays zero).
MultiPoly make_monic(const MultiPoly& a);

}  // namespace wzsum
