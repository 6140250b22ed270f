#include "wzsum/ratfunc.hpp"

#include "wzsum/errors.hpp"

namespace wzsum {

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw ZeroDivisionError("zero denominator expression");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  make_den_monic();
}

void RatFunc::make_den_monic() {
  const Rational scale = inverse(den_.leading_coefficient());
  num_ *= scale;
  den_ *= scale;
}

// Cancels common factors of num_ and den_, all of which are known to divide g.
void RatFunc::cancel_within(MultiPoly g) {
  while (!num_.is_zero() && !g.is_constant()) {
    const MultiPoly h = gcd(num_, g);
    if (h.is_constant()) break;
    num_ = exact_divide(num_, h);
    den_ = exact_divide(den_, h);
    g = exact_divide(g, h);
  }
  if (num_.is_zero()) den_ = MultiPoly(1);
}

// Both operands are reduced, so the sum can only share factors with gcd(b, d)
// and the product only needs the two cross cancellations.
RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const MultiPoly g = gcd(den_, rhs.den_);
  const MultiPoly b = exact_divide(den_, g);
  const MultiPoly d = exact_divide(rhs.den_, g);
  num_ = num_ * d + rhs.num_ * b;
  den_ = b * d * g;
  cancel_within(g);
  make_den_monic();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RatFunc();
  const MultiPoly g1 = gcd(num_, rhs.den_);
  const MultiPoly g2 = gcd(rhs.num_, den_);
  num_ = exact_divide(num_, g1) * exact_divide(rhs.num_, g2);
  den_ = exact_divide(den_, g2) * exact_divide(rhs.den_, g1);
  make_den_monic();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw ZeroDivisionError("zero denominator expression");
  RatFunc inv;
  inv.num_ = rhs.den_;
  inv.den_ = rhs.num_;
  inv.make_den_monic();
  return *this *= inv;
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return RatFunc(1) / pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.make_den_monic();
  return r;
}

RatFunc RatFunc::shifted(Var v, const Rational& shift) const {
  return RatFunc(num_.shifted(v, shift), den_.shifted(v, shift));
}

Rational RatFunc::evaluate(const Assignment& values) const {
  const Rational d = den_.evaluate(values);
  if (d.is_zero()) throw PoleError("pole at assignment");
  return num_.evaluate(values) / d;
}

std::string RatFunc::str() const {
  if (den_ == MultiPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace wzsum
