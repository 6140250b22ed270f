#pragma once

#include <vector>

#include "wzsum/rational.hpp"

namespace wzsum {

struct TaylorRoute {
  std::vector<Rational> shifted;   // coefficient of (x+1)^j of f, by Taylor shift
  std::vector<Rational> expected;  // (-1)^(n+j) C(b+j,j) C(b-a+n,n-j)
  bool ok = false;
};

/// Expands f(x) = sum_k C(a,n-k) C(b+k,k) x^k around x = -1 by repeated
/// synthetic division and compares every coefficient with the closed form.
TaylorRoute taylor_route(long n, const Rational& alpha, const Rational& beta);
bool taylor_route_check(long n, const Rational& alpha, const Rational& beta);

/// Both sides of the two-variable form at (x, y) equal y^n times the
/// one-variable form at x/y. Requires y != 0.
bool two_variable_reduction_check(long n, const Rational& alpha, const Rational& beta, const Rational& x,
                                  const Rational& y);

/// With s = n - l - 1/2 and t = -l - 1/2 the Alzer-Kouba sum is the ratio sum
/// term by term, and 4^n C(l,n) / C(2l,n) is its product side.
bool alzer_kouba_substitution_check(long n, const Rational& lambda);

/// sum_k (-1)^(n+k) C(n,k) a_k when `alternating`, sum_k C(n,k) a_k otherwise.
std::vector<Rational> binomial_transform(const std::vector<Rational>& a, bool alternating);

/// The lower-parameter identity and its inversion as sequences in n <= n_max:
/// inverting either side returns the other, and the round trip is the identity.
bool inversion_involution_check(long n_max, const Rational& s, const Rational& p);

}  // namespace wzsum
