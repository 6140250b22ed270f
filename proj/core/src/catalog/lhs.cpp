#include "sides_common.hpp"

namespace wzsum {
namespace {

using namespace sides;

template <Scalar S>
S simons(const Point<S>& P) {
  const long n = P.n;
  const S& x = P["x"];
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x) sum += S(C(n, k) * C(n + k, k)) * xk;
  return sum;
}

template <Scalar S>
S two_variable(const Point<S>& P) {
  const long n = P.n;
  const S &a = P["alpha"], &b = P["beta"], &x = P["x"], &y = P["y"];
  S sum(0);
  for (long k = 0; k <= n; ++k)
    sum += binom_poly(a, n - k) * binom_poly(b + S(k), k) * pow(x, k) * pow(y, n - k);
  return sum;
}

template <Scalar S>
S one_variable(const Point<S>& P) {
  const long n = P.n;
  const S &a = P["alpha"], &b = P["beta"], &x = P["x"];
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x) sum += binom_poly(a, n - k) * binom_poly(b + S(k), k) * xk;
  return sum;
}

template <Scalar S>
S index_form(const Point<S>& P) {
  const long n = P.n, j = P.index("j");
  const S &a = P["alpha"], &b = P["beta"];
  S sum(0);
  for (long k = j; k <= n; ++k)
    sum += S(sgn(k + j) * C(k, j)) * binom_poly(b + S(k), k) * binom_poly(a, n - k);
  return sum;
}

template <Scalar S>
S alzer_kouba(const Point<S>& P) {
  return S(pow4(P.n)) * binom_poly(P["lambda"], P.n);
}

template <Scalar S>
S ratio_sum(const Point<S>& P) {
  const long n = P.n;
  const S &s = P["s"], &t = P["t"];
  S sum(0);
  for (long k = 0; k <= n; ++k) sum += S(C(n, k)) * binom_poly(s, k) / binom_poly(t + S(k), k);
  return sum;
}

template <Scalar S>
S lower_param(const Point<S>& P) {
  const long n = P.n;
  const S &s = P["s"], &p = P["p"];
  S sum(0);
  for (long k = 0; k <= n; ++k)
    sum += S(sgn(n + k) * C(n, k)) * binom_poly(s + S(k), k) * binom_lower(k, p);
  return sum;
}

template <Scalar S>
S beta_x(const Point<S>& P) {
  const long n = P.n;
  const S &b = P["beta"], &x = P["x"];
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x) sum += S(C(n, k)) * binom_poly(b + S(k), k) * xk;
  return sum;
}

template <Scalar S>
S alternating_top(const Point<S>& P) {
  const long n = P.n;
  const S& b = P["beta"];
  S sum(0);
  for (long k = 0; k <= n; ++k) sum += S(sgn(k) * C(n, k)) * binom_poly(b + S(k), n);
  return sum;
}

template <Scalar S>
S alternating_diag(const Point<S>& P) {
  const long n = P.n;
  const S& b = P["beta"];
  S sum(0);
  for (long k = 0; k <= n; ++k) sum += S(sgn(k) * C(n, k)) * binom_poly(b + S(k), k);
  return sum;
}

template <Scalar S>
S harmonic_n(const Point<S>& P) {
  return S(H(P.n));
}

template <Scalar S>
S central_x(const Point<S>& P) {
  const long n = P.n;
  const S& x = P["x"];
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x) sum += S(C(n, k) * central_binomial(k) / pow4(k)) * xk;
  return sum;
}

template <Scalar S>
S legendre_t(const Point<S>& P) {
  return legendre(P.n, legendre_argument(P["t"]));
}

template <Scalar S>
S legendre_inverted(const Point<S>& P) {
  return legendre_inversion_lhs(P.n, P["t"]);
}

template <Scalar S>
S harmonic_s(const Point<S>& P) {
  const long n = P.n;
  const S& s = P["s"];
  S sum(0);
  for (long k = 1; k <= n; ++k) sum += S(sgn(n + k) * C(n, k) * H(k)) * binom_poly(s + S(k), k);
  return sum;
}

template <Scalar S>
S central_harmonic(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 1; k <= n; ++k) sum += sgn(k) * C(n, k) * central_binomial(k) * H(k) / pow4(k);
  return S(sum);
}

template <Scalar S>
S harmonic_squared(const Point<S>& P) {
  const Rational h = H(P.n);
  return S(h * h);
}

template <Scalar S>
S harmonic_square_s(const Point<S>& P) {
  const long n = P.n;
  const S& s = P["s"];
  S sum(0);
  for (long k = 1; k <= n; ++k) {
    const Rational h = H(k);
    sum += S(sgn(n + k) * C(n, k) * (h * h + H2(k))) * binom_poly(s + S(k), k);
  }
  return sum;
}

template <Scalar S>
S lower_param_plain(const Point<S>& P) {
  const long n = P.n;
  const S &s = P["s"], &p = P["p"];
  S sum(0);
  for (long k = 0; k <= n; ++k) sum += S(C(n, k)) * binom_poly(s + p, k) * binom_lower(k, p);
  return sum;
}

template <Scalar S>
S quarter_power(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 0; k <= n; ++k) sum += C(2 * n, 2 * k) * C(2 * n - 2 * k, n - k) * pow4(k);
  return S(sum);
}

template <Scalar S>
S squares_over_central(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 0; k <= n; ++k) {
    const Rational c = C(n, k);
    sum += pow4(k) * c * c / central_binomial(k);
  }
  return S(sum);
}

template <Scalar S>
S central_s(const Point<S>& P) {
  const long n = P.n;
  const S& s = P["s"];
  S sum(0);
  for (long k = 0; k <= n; ++k) sum += S(central_binomial(n - k) * pow4(k)) * binom_poly(s + S(k), k);
  return sum;
}

template <Scalar S>
S central_tail_harmonic(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 0; k <= n; ++k) sum += central_binomial(k) * H(n - k) / pow4(k);
  return S(sum);
}

template <Scalar S>
S weighted_squares(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 0; k <= n; ++k) {
    const Rational c = C(n, k);
    sum += Rational(k) * c * c;
  }
  return S(sum);
}

template <Scalar S>
S squares_h(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 1; k <= n; ++k) {
    const Rational c = C(n, k);
    sum += c * c * H(k);
  }
  return S(sum);
}

template <Scalar S>
S squares_hh(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 1; k < n; ++k) {
    const Rational c = C(n, k);
    sum += c * c * H(k) * H(n - k);
  }
  return S(sum);
}

template <Scalar S>
S squares_h2(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 1; k <= n; ++k) {
    const Rational c = C(n, k), h = H(k);
    sum += c * c * (h * h + H2(k));
  }
  return S(sum);
}

template <Scalar S>
SideTable<S> build() {
  return {
      {"ID01", simons<S>},
      {"ID02", two_variable<S>},
      {"ID03", one_variable<S>},
      {"ID04", index_form<S>},
      {"ID05", alzer_kouba<S>},
      {"ID06", ratio_sum<S>},
      {"ID07", lower_param<S>},
      {"ID08", beta_x<S>},
      {"ID09", alternating_top<S>},
      {"ID10", alternating_diag<S>},
      {"ID11", harmonic_n<S>},
      {"ID12", central_x<S>},
      {"ID13", legendre_t<S>},
      {"ID14", legendre_inverted<S>},
      {"ID15", harmonic_s<S>},
      {"ID16", harmonic_n<S>},
      {"ID17", central_harmonic<S>},
      {"ID18", harmonic_squared<S>},
      {"ID18G", harmonic_square_s<S>},
      {"ID19", lower_param_plain<S>},
      {"ID20", quarter_power<S>},
      {"ID20A", squares_over_central<S>},
      {"ID21", central_s<S>},
      {"ID22", central_tail_harmonic<S>},
      {"ID23", weighted_squares<S>},
      {"ID24", squares_h<S>},
      {"ID25", squares_hh<S>},
      {"ID26", squares_h2<S>},
  };
}

}  // namespace

template <Scalar S>
const SideTable<S>& lhs_table() {
  static const SideTable<S> table = build<S>();
  return table;
}

template const SideTable<Rational>& lhs_table<Rational>();
template const SideTable<Jet2>& lhs_table<Jet2>();

}  // namespace wzsum
