#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wzsum/poly.hpp"
#include "wzsum/rational.hpp"

namespace wzsum {

/// Seeded source of rationals p/q with |p| <= 100 and 1 <= q <= 100.
///
/// Built on std::mt19937_64 (whose output sequence is fixed by the standard)
/// with explicit modular reduction, so draws are identical on every platform.
class RationalSampler {
 public:
  static constexpr long kBound = 100;

  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next();

 private:
  std::mt19937_64 engine_;
};

/// Returns a rejection reason, or nullopt when the assignment is acceptable.
using Rejector = std::function<std::optional<std::string>(const Assignment&)>;

/// True for -1, -2, -3, ...
bool is_negative_integer(const Rational& x);

/// `count` assignments of the named parameters, each redrawn until `reject`
/// accepts it; a slot stays empty after `max_attempts` rejections.
std::vector<std::optional<Assignment>> draw_assignments(const std::vector<std::string>& names, int count,
                                                        std::uint64_t seed, const Rejector& reject,
                                                        int max_attempts = 1000);

}  // namespace wzsum
