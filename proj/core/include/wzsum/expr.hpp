#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "wzsum/ratfunc.hpp"

namespace wzsum {

/// Expression AST for certificates and term ratios.
///
/// Grammar (whitespace ignored, all binary operators left-associative):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INTEGER)*
///   primary := INTEGER | IDENT | '(' expr ')'
///
/// IDENT is [A-Za-z_][A-Za-z0-9_]*, INTEGER is [0-9]+.
struct Expr {
  enum class Kind { integer, variable, negate, add, subtract, multiply, divide, power };

  Kind kind = Kind::integer;
  mpz_class value;           // integer literal, or the exponent of a power
  std::string name;          // variable name
  std::vector<Expr> args;    // operands (1 for negate/power, 2 for binary ops)
  std::size_t offset = 0;    // byte offset of the node in the source; not compared

  static Expr integer(mpz_class v);
  static Expr variable(std::string name);
  static Expr negate(Expr e);
  static Expr binary(Kind op, Expr lhs, Expr rhs);
  static Expr power(Expr base, unsigned long exponent);

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws ParseError carrying the byte offset of the first offending token.
Expr parse_expr(std::string_view text);

/// Minimal-parenthesis rendering; parse_expr(render(e)) == e.
std::string render(const Expr& e);

/// Throws ParseError on an unknown variable and ZeroDivisionError
/// ("zero denominator expression") on division by the zero polynomial.
RatFunc to_ratfunc(const Expr& e);

inline RatFunc to_ratfunc(std::string_view text) { return to_ratfunc(parse_expr(text)); }

}  // namespace wzsum
