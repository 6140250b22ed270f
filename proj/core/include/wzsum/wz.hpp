#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wzsum/hyperterm.hpp"
#include "wzsum/params.hpp"
#include "wzsum/ratfunc.hpp"
#include "wzsum/report.hpp"

namespace wzsum {

/// A hypergeometric term T(n, k) with its WZ certificate ratio c = G/T, where
///
///   orientation * (T(n+1, k) - T(n, k)) = G(n, k+1) - G(n, k).
struct WZPair {
  std::string name;
  HyperTerm term;
  RatFunc certificate;
  int orientation = 1;
  /// Free rational parameters (drawn at random for the concrete checks).
  std::vector<Var> params;
  /// Extra integer indices that range over 0..n (e.g. j).
  std::vector<Var> indices;
};

/// orientation*(r_n - 1) - c(k+1)*r_k + c with r_v = T(v+1)/T(v): the WZ
/// equation divided by T(n, k). Zero iff the certificate is valid.
RatFunc certificate_residual(const WZPair& pair);

struct VerificationReport {
  std::string pair;
  bool symbolic_ok = false;
  RatFunc residual;
  std::vector<CheckRow> rows;

  bool all_pass() const;
};

/// Symbolic residual check, then exact boundary (G(n,0) = G(n,n+2) = 0),
/// edge (T(n,n+1) = 0) and base (T(0,0) = 1) checks for n <= n_max over
/// `samples` seeded parameter draws. Sub-check failures become rows.
VerificationReport verify_wz_pair(const WZPair& pair, long n_max, int samples, std::uint64_t seed);

/// Seeded parameter draws for a pair: no negative integers, and no integers
/// for parameters that occur in a lower binomial argument; redrawn on
/// rejection. Empty slots mean the draw was given up.
std::vector<std::optional<Assignment>> draw_pair_params(const WZPair& pair, int samples, std::uint64_t seed);

/// Row form of the telescoped identity sum_{k=0}^{n} T(n,k) = 1, for every
/// n <= n_max, every draw and every value 0..n of each extra index.
std::vector<CheckRow> telescoping_rows(const WZPair& pair, long n_max,
                                       const std::vector<std::optional<Assignment>>& draws);

struct DrawOutcome {
  Status status = Status::pass;
  std::string reason;
};

/// One outcome per draw: pass iff every sum equals 1, skipped on a pole.
std::vector<DrawOutcome> telescoping_sum_check(const WZPair& pair, long n_max,
                                               const std::vector<std::optional<Assignment>>& draws);

/// Negative-control variants of a pair: "scale-cert:<rational>" multiplies the
/// certificate, "add-cert:<expr>" adds an expression to it, "flip-exp:<i>"
/// inverts the exponent of factor i and "flip-orientation" negates the
/// orientation. Throws std::invalid_argument for anything else.
WZPair mutated_pair(const WZPair& pair, std::string_view mutation);

}  // namespace wzsum
