#pragma once

#include <vector>

#include "wzsum/rational.hpp"

namespace wzsum {

/// Prefix table of generalized harmonic numbers H_n^{(m)} for a fixed order m.
///
/// values()[0] == 0 and values()[n] - values()[n-1] == 1/n^m. The cache only
/// grows; grow it single-threaded, after which concurrent const reads are safe.
class HarmonicCache {
 public:
  explicit HarmonicCache(long order = 1);

  long order() const noexcept { return order_; }
  long size() const noexcept { return static_cast<long>(values_.size()); }

  void reserve_up_to(long n);
  const Rational& at(long n) const;  // requires n < size()
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  long order_;
  std::vector<Rational> values_;
};

/// H_n^{(m)} = sum_{i=1}^{n} 1/i^m, with H_0^{(m)} = 0.
///
/// Served from the process-wide table when it already covers n, otherwise
/// summed directly (the shared table is never mutated from here).
Rational harmonic(long n, long m = 1);

/// Grow the process-wide tables for orders 1 and 2 to cover n. Not thread
/// safe; call before fanning out work.
void warm_harmonic_cache(long n);

}  // namespace wzsum
