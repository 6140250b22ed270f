#include "wzsum/legendre.hpp"

#include <deque>
#include <mutex>

namespace wzsum {

const Rational& central_binomial(long k) {
  static std::mutex mutex;
  static std::deque<Rational> table;  // references stay valid on growth
  if (k < 0) throw DomainError("central binomial index must be non-negative");
  std::lock_guard lock(mutex);
  while (static_cast<long>(table.size()) <= k) {
    const long i = static_cast<long>(table.size());
    table.push_back(binom_int(2 * i, i));
  }
  return table[static_cast<std::size_t>(k)];
}

}  // namespace wzsum
