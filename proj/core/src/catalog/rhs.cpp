#include "sides_common.hpp"

namespace wzsum {
namespace {

using namespace sides;

template <Scalar S>
S simons(const Point<S>& P) {
  const long n = P.n;
  const S x1 = P["x"] + S(1);
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x1) sum += S(sgn(n + k) * C(n, k) * C(n + k, k)) * xk;
  return sum;
}

template <Scalar S>
S two_variable(const Point<S>& P) {
  const long n = P.n;
  const S &a = P["alpha"], &b = P["beta"], &x = P["x"], &y = P["y"];
  const S top = b - a + S(n);
  S sum(0);
  for (long k = 0; k <= n; ++k)
    sum += S(sgn(n + k)) * binom_poly(top, n - k) * binom_poly(b + S(k), k) * pow(x + y, k) * pow(y, n - k);
  return sum;
}

template <Scalar S>
S one_variable(const Point<S>& P) {
  const long n = P.n;
  const S &a = P["alpha"], &b = P["beta"];
  const S x1 = P["x"] + S(1);
  const S top = b - a + S(n);
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x1)
    sum += S(sgn(n + k)) * binom_poly(top, n - k) * binom_poly(b + S(k), k) * xk;
  return sum;
}

template <Scalar S>
S index_form(const Point<S>& P) {
  const long n = P.n, j = P.index("j");
  const S &a = P["alpha"], &b = P["beta"];
  return S(sgn(n + j)) * binom_poly(b + S(j), j) * binom_poly(b - a + S(n), n - j);
}

template <Scalar S>
S alzer_kouba(const Point<S>& P) {
  const long n = P.n;
  const S& l = P["lambda"];
  const S half(Rational(1, 2));
  S sum(0);
  for (long k = 0; k <= n; ++k)
    sum += S(C(n, k)) * binom_poly(S(n) - l - half, k) / binom_poly(S(k) - l - half, k);
  return binom_poly(S(2) * l, n) * sum;
}

template <Scalar S>
S ratio_sum(const Point<S>& P) {
  const S &s = P["s"], &t = P["t"];
  S prod(1);
  for (long i = 1; i <= P.n; ++i) prod *= (s + t + S(i)) / (t + S(i));
  return prod;
}

template <Scalar S>
S lower_param(const Point<S>& P) {
  const S &s = P["s"], &p = P["p"];
  return binom_lower(P.n, p) * binom_poly(s + p, P.n);
}

template <Scalar S>
S beta_x(const Point<S>& P) {
  const long n = P.n;
  const S& b = P["beta"];
  const S x1 = P["x"] + S(1);
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x1) sum += S(sgn(n + k) * C(n, k)) * binom_poly(b + S(k), n) * xk;
  return sum;
}

template <Scalar S>
S alternating_top(const Point<S>& P) {
  return S(sgn(P.n));
}

template <Scalar S>
S alternating_diag(const Point<S>& P) {
  return S(sgn(P.n)) * binom_poly(P["beta"], P.n);
}

template <Scalar S>
S half_alternating_full(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 0; k <= n; ++k) sum += sgn(n + k) * C(n, k) * C(n + k, k) * H(n + k);
  return S(sum / 2);
}

template <Scalar S>
S central_x(const Point<S>& P) {
  const long n = P.n;
  const S x1 = P["x"] + S(1);
  S sum(0), xk(1);
  for (long k = 0; k <= n; ++k, xk *= x1) sum += S(central_binomial(k) * central_binomial(n - k)) * xk;
  return sum / S(pow4(n));
}

template <Scalar S>
S legendre_t(const Point<S>& P) {
  return legendre_new_repr(P.n, P["t"]);
}

template <Scalar S>
S legendre_inverted(const Point<S>& P) {
  return legendre_inversion_rhs(P.n, P["t"]);
}

template <Scalar S>
S harmonic_s(const Point<S>& P) {
  const S& s = P["s"];
  return binom_poly(s, P.n) * (S(H(P.n)) + digamma_diff(s, P.n));
}

template <Scalar S>
S half_alternating(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 1; k <= n; ++k) sum += sgn(n + k) * C(n, k) * C(n + k, k) * H(k);
  return S(sum / 2);
}

template <Scalar S>
S central_harmonic(const Point<S>& P) {
  const long n = P.n;
  return S(central_binomial(n) * (H(n) - H(2 * n)) / pow(Rational(2), 2 * n - 1));
}

template <Scalar S>
S quarter_alternating(const Point<S>& P) {
  const long n = P.n;
  Rational sum(0);
  for (long k = 1; k <= n; ++k) {
    const Rational h = H(k);
    sum += sgn(n + k) * C(n, k) * C(n + k, k) * (h * h + H2(k));
  }
  return S(sum / 4);
}

template <Scalar S>
S harmonic_square_s(const Point<S>& P) {
  const long n = P.n;
  const S& s = P["s"];
  const S first = S(H(n)) + digamma_diff(s, n);
  return binom_poly(s, n) * (first * first + S(H2(n)) + trigamma_diff(s, n));
}

template <Scalar S>
S lower_param_plain(const Point<S>& P) {
  const S &s = P["s"], &p = P["p"];
  return binom_lower(P.n, p) * binom_poly(s + S(P.n), P.n);
}

template <Scalar S>
S central_4n(const Point<S>& P) {
  return S(C(4 * P.n, 2 * P.n));
}

template <Scalar S>
S central_4n_ratio(const Point<S>& P) {
  return S(C(4 * P.n, 2 * P.n) / central_binomial(P.n));
}

template <Scalar S>
S central_s(const Point<S>& P) {
  const long n = P.n;
  const S& s = P["s"];
  return S(central_binomial(n)) * binom_upper_shift(S(2) * s + S(1), 2 * n) / binom_upper_shift(s, n);
}

template <Scalar S>
S central_tail_harmonic(const Point<S>& P) {
  const long n = P.n;
  return S(Rational(2 * n + 1) * central_binomial(n) / pow4(n) * (Rational(2) * H(2 * n + 1) - H(n) - 2));
}

template <Scalar S>
S weighted_squares(const Point<S>& P) {
  return S(Rational(P.n, 2) * central_binomial(P.n));
}

template <Scalar S>
S squares_h(const Point<S>& P) {
  const long n = P.n;
  return S(central_binomial(n) * (Rational(2) * H(n) - H(2 * n)));
}

template <Scalar S>
S squares_h_flipped(const Point<S>& P) {
  const long n = P.n;
  return S(central_binomial(n) * (Rational(2) * H(n) + H(2 * n)));
}

template <Scalar S>
S squares_hh(const Point<S>& P) {
  const long n = P.n;
  const Rational d = H(2 * n) - Rational(2) * H(n);
  return S(central_binomial(n) * (d * d + H2(n) - H2(2 * n)));
}

template <Scalar S>
S squares_h2(const Point<S>& P) {
  const long n = P.n;
  const Rational d = H(2 * n) - Rational(2) * H(n);
  return S(central_binomial(n) * (d * d + Rational(2) * H2(n) - H2(2 * n)));
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
      {"ID11", half_alternating_full<S>},
      {"ID12", central_x<S>},
      {"ID13", legendre_t<S>},
      {"ID14", legendre_inverted<S>},
      {"ID15", harmonic_s<S>},
      {"ID16", half_alternating<S>},
      {"ID17", central_harmonic<S>},
      {"ID18", quarter_alternating<S>},
      {"ID18G", harmonic_square_s<S>},
      {"ID19", lower_param_plain<S>},
      {"ID20", central_4n<S>},
      {"ID20A", central_4n_ratio<S>},
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
const SideTable<S>& rhs_table() {
  static const SideTable<S> table = build<S>();
  return table;
}

template <Scalar S>
const SideTable<S>& rhs_mutations() {
  static const SideTable<S> table = {{"ID24:flip-h2n", squares_h_flipped<S>}};
  return table;
}

template const SideTable<Rational>& rhs_table<Rational>();
template const SideTable<Jet2>& rhs_table<Jet2>();
template const SideTable<Rational>& rhs_mutations<Rational>();
template const SideTable<Jet2>& rhs_mutations<Jet2>();

}  // namespace wzsum
