#include "wzsum/errors.hpp"
#include "wzsum/expr.hpp"
#include "wzsum/hyperterm.hpp"

namespace wzsum {

AffineForm AffineForm::from_poly(const MultiPoly& p) {
  if (p.degree() > 1) throw std::invalid_argument("not an affine expression: " + p.str());
  AffineForm form;
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) == 0) {
      form.constant_ = c;
      continue;
    }
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    if (!c.is_integer()) {
      throw NonHypergeometricError("non-hypergeometric shift: coefficient " + c.str() + " of " +
                                   std::string(var_name(static_cast<Var>(i))) + " is not an integer");
    }
    form.coeffs_[static_cast<Var>(i)] = c.to_long();
  }
  return form;
}

AffineForm AffineForm::parse(std::string_view text) {
  const RatFunc r = to_ratfunc(text);
  if (!r.den().is_constant()) throw std::invalid_argument("not an affine expression: " + std::string(text));
  return from_poly(r.num());
}

long AffineForm::coefficient(Var v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? 0 : it->second;
}

MultiPoly AffineForm::to_poly() const {
  MultiPoly p(constant_);
  for (const auto& [v, c] : coeffs_) {
    MultiPoly term = MultiPoly::variable(v);
    term *= Rational(c);
    p += term;
  }
  return p;
}

Rational AffineForm::evaluate(const Assignment& values) const {
  Rational total = constant_;
  for (const auto& [v, c] : coeffs_) {
    auto it = values.find(var_name(v));
    if (it == values.end())
      throw std::invalid_argument("variable '" + std::string(var_name(v)) + "' is not assigned");
    total += Rational(c) * it->second;
  }
  return total;
}

std::string AffineForm::str() const { return to_poly().str(); }

AffineForm& AffineForm::operator+=(const AffineForm& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [v, c] : rhs.coeffs_) {
    long& slot = coeffs_[v];
    slot += c;
    if (slot == 0) coeffs_.erase(v);
  }
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [v, c] : rhs.coeffs_) {
    long& slot = coeffs_[v];
    slot -= c;
    if (slot == 0) coeffs_.erase(v);
  }
  return *this;
}

}  // namespace wzsum
