#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wzsum/binomial.hpp"
#include "wzsum/report.hpp"

namespace wzsum {

/// A parameter of a catalog identity. Rational parameters are drawn at random;
/// index parameters run over every integer 0..n.
struct ParamDef {
  enum class Kind { rational, index };
  std::string name;
  Kind kind = Kind::rational;
};

/// The summation bound n together with parameter values of scalar type S.
template <Scalar S>
struct Point {
  long n = 0;
  std::map<std::string, S, std::less<>> values;

  const S& operator[](std::string_view name) const;
  /// Integer value of an index parameter.
  long index(std::string_view name) const;
};

extern template struct Point<Rational>;
extern template struct Point<Jet2>;

template <Scalar S>
using Side = std::function<S(const Point<S>&)>;

template <Scalar S>
using SideTable = std::map<std::string, Side<S>, std::less<>>;

/// Left- and right-hand side evaluators, keyed by identity id.
template <Scalar S>
const SideTable<S>& lhs_table();
template <Scalar S>
const SideTable<S>& rhs_table();

/// Replacement sides used as negative controls, keyed "<id>:<mutation>".
template <Scalar S>
const SideTable<S>& rhs_mutations();

/// Returns a reason when the point lies outside the identity's domain.
using Exclusion = std::function<std::optional<std::string>(const Point<Rational>&)>;

struct IdentityEntry {
  std::string id;
  std::string reference;  // name and shape of the identity
  std::vector<ParamDef> params;
  long n_min = 0;
  long default_n_max = 30;
  Exclusion exclude;  // may be empty

  Side<Rational> lhs;
  Side<Rational> rhs;
  Side<Jet2> lhs_jet;
  Side<Jet2> rhs_jet;

  std::vector<std::string> rational_params() const;
  std::vector<std::string> index_params() const;
  std::vector<std::string> param_names() const;
};

/// All entries in id order.
const std::vector<IdentityEntry>& catalog();

/// Throws std::out_of_range for an unknown id.
const IdentityEntry& find_entry(std::string_view id);

/// Entry with its right-hand side swapped for a mutation. Supported mutations
/// are the ones registered in rhs_mutations() for this id, plus
/// "scale-rhs:<rational>" for any entry. Throws std::invalid_argument otherwise.
IdentityEntry mutated_entry(const IdentityEntry& entry, std::string_view mutation);

/// Evaluate both sides at one point and compare; MathError from either side
/// becomes a skipped row carrying the message.
CheckRow check_point(const IdentityEntry& entry, const Point<Rational>& point);

struct CheckConfig {
  std::optional<long> n_max;  // entry default when unset
  int samples = 5;
  std::uint64_t seed = 0;
};

/// Every n in [n_min, n_max], `samples` seeded draws per n (redrawn past
/// exclusions, at most 1000 attempts), every index value per draw.
std::vector<CheckRow> check_identity(const IdentityEntry& entry, const CheckConfig& config);

/// Deterministic seed for the draws of one (entry, n) cell.
std::uint64_t cell_seed(std::uint64_t seed, std::string_view id, long n);

}  // namespace wzsum
