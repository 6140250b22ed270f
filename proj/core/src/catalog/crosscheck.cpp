#include "wzsum/binomial.hpp"
#include "wzsum/catalog.hpp"
#include "wzsum/crosscheck.hpp"

namespace wzsum {

bool two_variable_reduction_check(long n, const Rational& alpha, const Rational& beta, const Rational& x,
                                  const Rational& y) {
  if (y.is_zero()) throw DomainError("y must be nonzero");
  const auto& two = find_entry("ID02");
  const auto& one = find_entry("ID03");
  const Point<Rational> p2{n, {{"alpha", alpha}, {"beta", beta}, {"x", x}, {"y", y}}};
  const Point<Rational> p1{n, {{"alpha", alpha}, {"beta", beta}, {"x", x / y}}};
  const Rational scale = pow(y, n);
  return two.lhs(p2) == scale * one.lhs(p1) && two.rhs(p2) == scale * one.rhs(p1);
}

bool alzer_kouba_substitution_check(long n, const Rational& lambda) {
  const Rational half(1, 2);
  const Rational s = Rational(n) - lambda - half;
  const Rational t = -lambda - half;
  for (long k = 0; k <= n; ++k) {
    const Rational ak = binom_int(n, k) * binom_poly(Rational(n) - lambda - half, k) /
                        binom_poly(Rational(k) - lambda - half, k);
    const Rational rk = binom_int(n, k) * binom_poly(s, k) / binom_poly(t + Rational(k), k);
    if (ak != rk) return false;
  }
  const Point<Rational> ratio{n, {{"s", s}, {"t", t}}};
  const Rational two_lambda = binom_poly(Rational(2) * lambda, n);
  return pow(Rational(4), n) * binom_poly(lambda, n) == two_lambda * find_entry("ID06").rhs(ratio);
}

std::vector<Rational> binomial_transform(const std::vector<Rational>& a, bool alternating) {
  const long size = static_cast<long>(a.size());
  std::vector<Rational> out(a.size());
  for (long n = 0; n < size; ++n) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k) {
      const Rational term = binom_int(n, k) * a[k];
      sum += alternating ? sign_power(n + k) * term : term;
    }
    out[n] = sum;
  }
  return out;
}

bool inversion_involution_check(long n_max, const Rational& s, const Rational& p) {
  // f_n = C(n,p) C(s+p,n) and g_n = C(s+n,n) C(n,p) are the closed sides of the
  // lower-parameter identity and of its inversion.
  const auto& forward = find_entry("ID07");
  const auto& inverse = find_entry("ID19");
  std::vector<Rational> f, g;
  for (long n = 0; n <= n_max; ++n) {
    const Point<Rational> at{n, {{"s", s}, {"p", p}}};
    f.push_back(forward.rhs(at));
    g.push_back(inverse.rhs(at));
  }
  const auto alt_g = binomial_transform(g, true);
  const auto plain_f = binomial_transform(f, false);
  return alt_g == f && plain_f == g && binomial_transform(alt_g, false) == g &&
         binomial_transform(plain_f, true) == f;
}

}  // namespace wzsum
