#include "wzsum/harmonic.hpp"

#include <stdexcept>

#include "wzsum/binomial.hpp"
#include "wzsum/errors.hpp"

namespace wzsum {

Rational binom_int(long n, long k) {
  if (k < 0) return Rational(0);
  mpz_class r;
  mpz_class top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

HarmonicCache::HarmonicCache(long order) : order_(order) {
  if (order < 1) throw DomainError("harmonic order must be positive");
  values_.emplace_back(0);
}

void HarmonicCache::reserve_up_to(long n) {
  for (long i = size(); i <= n; ++i)
    values_.push_back(values_.back() + inverse(pow(Rational(i), order_)));
}

const Rational& HarmonicCache::at(long n) const {
  if (n < 0 || n >= size()) throw std::out_of_range("harmonic cache index");
  return values_[static_cast<std::size_t>(n)];
}

namespace {

HarmonicCache& shared_cache(long order) {
  static HarmonicCache first(1);
  static HarmonicCache second(2);
  return order == 1 ? first : second;
}

}  // namespace

Rational harmonic(long n, long m) {
  if (m < 1) throw DomainError("harmonic order must be positive");
  if (n < 0) throw DomainError("harmonic index must be non-negative");
  if (m <= 2) {
    const HarmonicCache& cache = shared_cache(m);
    if (n < cache.size()) return cache.at(n);
  }
  Rational total(0);
  for (long i = 1; i <= n; ++i) total += inverse(pow(Rational(i), m));
  return total;
}

void warm_harmonic_cache(long n) {
  shared_cache(1).reserve_up_to(n);
  shared_cache(2).reserve_up_to(n);
}

}  // namespace wzsum
