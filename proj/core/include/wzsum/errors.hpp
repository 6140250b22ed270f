#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wzsum {

/// Base for every domain failure raised by the library (poles, division by
/// zero, evaluation outside a parameter domain).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroDivisionError : public MathError {
 public:
  ZeroDivisionError() : MathError("division by zero") {}
  explicit ZeroDivisionError(const std::string& what) : MathError(what) {}
};

/// A rational function or special-function difference hit a pole. `index`
/// carries the offending summation index when there is one, otherwise -1.
class PoleError : public MathError {
 public:
  PoleError(const std::string& what, long index = -1) : MathError(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// Argument outside the documented domain (e.g. t = 0 for the Legendre
/// representations).
class DomainError : public MathError {
 public:
  using MathError::MathError;
};

/// A binomial argument moves by a non-integer amount under a unit shift.
class NonHypergeometricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in an expression, a rational literal or a certificate file.
/// `offset` is the byte offset in the parsed text; line/column are 1-based and
/// are only meaningful for multi-line sources (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0,
             std::size_t column = 0)
      : std::runtime_error(what), offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wzsum
