#include "wzsum/hyperterm.hpp"

#include <algorithm>

#include "wzsum/binomial.hpp"
#include "wzsum/errors.hpp"

namespace wzsum {

HyperTerm::HyperTerm(Rational constant, AffineForm sign_exponent, std::vector<BinomialFactor> factors)
    : constant_(std::move(constant)), sign_(std::move(sign_exponent)), factors_(std::move(factors)) {
  if (!sign_.constant().is_integer())
    throw std::invalid_argument("sign exponent must have an integer constant");
  for (const auto& f : factors_)
    if (f.exponent != 1 && f.exponent != -1) throw std::invalid_argument("binomial exponent must be +1 or -1");
}

namespace {

Rational floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return Rational(q);
}

// Gamma(a) / Gamma(base) for a - base a non-negative integer.
Rational rising_ratio(const Rational& base, const Rational& a) {
  const long steps = (a - base).to_long();
  Rational r(1);
  for (long i = 0; i < steps; ++i) r *= base + Rational(i);
  return r;
}

struct GammaLedger {
  std::map<Rational, long> multiplicity;  // Gamma(arg)^mult

  void add(const Rational& arg, long mult) {
    long& m = multiplicity[arg];
    m += mult;
    if (m == 0) multiplicity.erase(arg);
  }
};

}  // namespace

Rational HyperTerm::evaluate(const Assignment& values) const {
  const Rational sign = sign_.evaluate(values);
  if (!sign.is_integer()) throw MathError("sign exponent is not an integer at this point");

  Rational value = constant_ * sign_power((sign.numerator() % 2 == 0) ? 0 : 1);
  long pole_order = 0;  // > 0: infinite, < 0: zero
  bool degenerate = false;
  GammaLedger gammas;

  for (const auto& f : factors_) {
    const Rational top = f.top.evaluate(values);
    const Rational bottom = f.bottom.evaluate(values);
    if (bottom.is_integer()) {
      const Rational b = binom_poly(top, bottom.to_long());
      if (b.is_zero()) {
        pole_order += f.exponent < 0 ? 1 : -1;
        degenerate = true;
      } else {
        value *= f.exponent > 0 ? b : inverse(b);
      }
      continue;
    }
    gammas.add(top + Rational(1), f.exponent);
    gammas.add(bottom + Rational(1), -f.exponent);
    gammas.add(top - bottom + Rational(1), -f.exponent);
  }

  // Group the remaining Gamma values by residue mod 1.
  std::map<Rational, std::vector<std::pair<Rational, long>>> classes;
  for (const auto& [arg, mult] : gammas.multiplicity) {
    if (arg.is_integer()) {
      if (arg.sign() > 0) {
        value *= pow(factorial(arg.to_long() - 1), mult);
      } else {
        pole_order += mult;
        degenerate = true;
      }
      continue;
    }
    classes[arg - floor_of(arg)].emplace_back(arg, mult);
  }
  for (const auto& [residue, members] : classes) {
    long net = 0;
    for (const auto& m : members) net += m.second;
    if (net != 0) throw MathError("term is not rational-valued at this point (Gamma class " + residue.str() + ")");
    const Rational base = std::min_element(members.begin(), members.end())->first;
    for (const auto& [arg, mult] : members) value *= pow(rising_ratio(base, arg), mult);
  }

  if (pole_order > 0) throw PoleError("pole of hypergeometric term");
  if (pole_order < 0) return Rational(0);
  if (degenerate) throw PoleError("indeterminate hypergeometric term (zero over zero)");
  return value;
}

namespace {

// Gamma(x + m) / Gamma(x) as a rational function.
RatFunc gamma_shift(const MultiPoly& x, long m) {
  MultiPoly prod(1);
  if (m >= 0) {
    for (long i = 0; i < m; ++i) prod *= x + MultiPoly(Rational(i));
    return RatFunc(prod);
  }
  for (long i = 1; i <= -m; ++i) prod *= x - MultiPoly(Rational(i));
  return RatFunc(MultiPoly(1), prod);
}

}  // namespace

RatFunc HyperTerm::shift_ratio(Var v) const {
  RatFunc ratio(sign_power(sign_.coefficient(v)));
  for (const auto& f : factors_) {
    const long a = f.top.coefficient(v);
    const long b = f.bottom.coefficient(v);
    if (a == 0 && b == 0) continue;
    const MultiPoly top1 = f.top.to_poly() + MultiPoly(1);
    const MultiPoly bottom1 = f.bottom.to_poly() + MultiPoly(1);
    const MultiPoly diff1 = f.top.to_poly() - f.bottom.to_poly() + MultiPoly(1);
    RatFunc r = gamma_shift(top1, a) / (gamma_shift(bottom1, b) * gamma_shift(diff1, a - b));
    ratio *= f.exponent > 0 ? r : RatFunc(1) / r;
  }
  return ratio;
}

std::string HyperTerm::str() const {
  std::string out = "sign(" + sign_.str() + ") * " + constant_.str();
  if (!factors_.empty()) {
    out += " * prod";
    for (const auto& f : factors_)
      out += " binom(" + f.top.str() + ", " + f.bottom.str() + ")^" + (f.exponent > 0 ? "1" : "-1");
  }
  return out;
}

}  // namespace wzsum
