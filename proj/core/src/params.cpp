#include "wzsum/params.hpp"

#include "wzsum/report.hpp"

namespace wzsum {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

Rational RationalSampler::next() {
  const long num = static_cast<long>(engine_() % static_cast<std::uint64_t>(2 * kBound + 1)) - kBound;
  const long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(kBound)) + 1;
  return Rational(num, den);
}

bool is_negative_integer(const Rational& x) { return x.is_integer() && x.sign() < 0; }

std::vector<std::optional<Assignment>> draw_assignments(const std::vector<std::string>& names, int count,
                                                        std::uint64_t seed, const Rejector& reject,
                                                        int max_attempts) {
  RationalSampler sampler(seed);
  std::vector<std::optional<Assignment>> draws;
  draws.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::optional<Assignment> accepted;
    for (int attempt = 0; attempt < max_attempts && !accepted; ++attempt) {
      Assignment a;
      for (const auto& name : names) a[name] = sampler.next();
      if (!reject || !reject(a)) accepted = std::move(a);
    }
    draws.push_back(std::move(accepted));
  }
  return draws;
}

}  // namespace wzsum
