#include "wzsum/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "wzsum/errors.hpp"

namespace wzsum {

Rational::Rational(long num, long den) : value_(mpz_class(num), mpz_class(den)) {
  if (den == 0) throw ZeroDivisionError();
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw ZeroDivisionError();
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw ZeroDivisionError();
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) {
    throw ParseError("malformed rational '" + std::string(text) + "'",
                     static_cast<std::size_t>(num.data() - text.data()));
  }
  if (slash != std::string_view::npos && !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'",
                     static_cast<std::size_t>(den.data() - text.data()));
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

long Rational::to_long() const {
  if (!is_integer()) throw std::range_error("rational " + str() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::range_error("integer " + str() + " does not fit in long");
  return n.get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ZeroDivisionError();
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) {
  Rational r;
  r.value_ = -x.value_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational inverse(const Rational& x) { return Rational(1) / x; }

Rational pow(const Rational& x, long e) {
  if (e < 0) return inverse(pow(x, -e));
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace wzsum
