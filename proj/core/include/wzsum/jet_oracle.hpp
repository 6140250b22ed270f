#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wzsum/catalog.hpp"

namespace wzsum {

/// Up to two parameter names. {} is plain evaluation, {"p"} the first
/// derivative in p, {"p", "p"} the second, {"s", "t"} the mixed partial.
struct DerivativeSpec {
  std::vector<std::string> vars;
};

struct JetValues {
  Rational lhs;
  Rational rhs;
};

/// Lift both sides of a catalog identity to second-order jets at `point` and
/// read off the requested derivative of each. Jet division poles surface as
/// PoleError.
JetValues derived_identity_via_jets(std::string_view base_id, const DerivativeSpec& spec,
                                    const Point<Rational>& point);

/// How a harmonic-number identity falls out of differentiating a base one.
///
/// `base_point` maps a point of the derived identity to the expansion point of
/// the base; `transform` maps a derivative of the base to the derived scale.
/// The transformed base lhs must equal the derived side named by
/// `sum_side_is_lhs`, and the transformed base rhs the other side.
struct JetDerivation {
  std::string derived_id;
  std::string base_id;
  DerivativeSpec spec;
  std::function<Point<Rational>(const Point<Rational>&)> base_point;
  std::function<Rational(const Rational&, const Point<Rational>&)> transform;
  bool sum_side_is_lhs = true;
};

const std::vector<JetDerivation>& jet_derivations();

/// Throws std::out_of_range when `derived_id` has no derivation.
const JetDerivation& find_derivation(std::string_view derived_id);

/// Row "<id>/jet": lhs holds the value produced by the jet path, rhs the
/// direct evaluation of the derived identity. Passes when both derived sides
/// match the transformed jet values.
CheckRow jet_check(const JetDerivation& derivation, const Point<Rational>& point);

}  // namespace wzsum
