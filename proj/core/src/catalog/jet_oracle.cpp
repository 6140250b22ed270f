#include "wzsum/jet_oracle.hpp"

#include <stdexcept>

#include "wzsum/harmonic.hpp"

namespace wzsum {

namespace {

Point<Jet2> lift(const Point<Rational>& point, const DerivativeSpec& spec) {
  if (spec.vars.size() > 2) throw std::invalid_argument("derivative order above 2");
  Point<Jet2> out;
  out.n = point.n;
  for (const auto& [name, value] : point.values) out.values.emplace(name, Jet2(value));
  if (!spec.vars.empty()) {
    const auto& first = spec.vars.front();
    out.values.at(first) = Jet2::variable1(point[first]);
    if (spec.vars.size() == 2 && spec.vars[1] != first) {
      out.values.at(spec.vars[1]) = Jet2::variable2(point[spec.vars[1]]);
    }
  }
  return out;
}

Rational extract(const Jet2& jet, const DerivativeSpec& spec) {
  switch (spec.vars.size()) {
    case 0:
      return jet.value();
    case 1:
      return jet.d1();
    default:
      return spec.vars[0] == spec.vars[1] ? jet.d11() * Rational(2) : jet.d12();
  }
}

Point<Rational> with(const Point<Rational>& point, std::initializer_list<std::pair<const char*, Rational>> extra) {
  Point<Rational> out{point.n, point.values};
  for (const auto& [name, value] : extra) out.values[name] = value;
  return out;
}

Rational at_s_equals_n(const Point<Rational>& P) { return Rational(P.n); }

std::vector<JetDerivation> build() {
  using P = const Point<Rational>&;
  const auto identity = [](const Rational& v, P) { return v; };
  const auto half = [](const Rational& v, P) { return v / Rational(2); };
  std::vector<JetDerivation> d;
  d.push_back({"ID11", "ID08", {{"beta"}},
               [](P p) { return with(p, {{"beta", Rational(p.n)}, {"x", Rational(-1)}}); },
               [](const Rational& v, P p) { return (sign_power(p.n) * v + harmonic(p.n)) / Rational(2); }, false});
  d.push_back({"ID15", "ID07", {{"p"}}, [](P p) { return with(p, {{"p", Rational(0)}}); }, identity, true});
  d.push_back({"ID16", "ID07", {{"p"}},
               [](P p) { return with(p, {{"s", at_s_equals_n(p)}, {"p", Rational(0)}}); }, half, false});
  d.push_back({"ID17", "ID07", {{"p"}},
               [](P p) { return with(p, {{"s", Rational(-1, 2)}, {"p", Rational(0)}}); },
               [](const Rational& v, P p) { return sign_power(p.n) * v; }, true});
  d.push_back({"ID18", "ID07", {{"p", "p"}},
               [](P p) { return with(p, {{"s", at_s_equals_n(p)}, {"p", Rational(0)}}); },
               [](const Rational& v, P) { return v / Rational(4); }, false});
  d.push_back({"ID18G", "ID07", {{"p", "p"}}, [](P p) { return with(p, {{"p", Rational(0)}}); }, identity, true});
  d.push_back({"ID22", "ID21", {{"s"}}, [](P p) { return with(p, {{"s", Rational(0)}}); },
               [](const Rational& v, P p) { return v / pow(Rational(4), p.n); }, true});
  d.push_back({"ID24", "ID06", {{"t"}},
               [](P p) { return with(p, {{"s", at_s_equals_n(p)}, {"t", Rational(0)}}); },
               [](const Rational& v, P) { return -v; }, true});
  d.push_back({"ID25", "ID06", {{"s", "t"}},
               [](P p) { return with(p, {{"s", at_s_equals_n(p)}, {"t", Rational(0)}}); },
               [](const Rational& v, P p) {
                 const long n = p.n;
                 return v + harmonic(n) * binom_int(2 * n, n) * (Rational(2) * harmonic(n) - harmonic(2 * n));
               },
               true});
  d.push_back({"ID26", "ID06", {{"t", "t"}},
               [](P p) { return with(p, {{"s", at_s_equals_n(p)}, {"t", Rational(0)}}); }, identity, true});
  return d;
}

}  // namespace

JetValues derived_identity_via_jets(std::string_view base_id, const DerivativeSpec& spec,
                                    const Point<Rational>& point) {
  const IdentityEntry& base = find_entry(base_id);
  const Point<Jet2> lifted = lift(point, spec);
  return {extract(base.lhs_jet(lifted), spec), extract(base.rhs_jet(lifted), spec)};
}

const std::vector<JetDerivation>& jet_derivations() {
  static const std::vector<JetDerivation> table = build();
  return table;
}

const JetDerivation& find_derivation(std::string_view derived_id) {
  for (const auto& d : jet_derivations())
    if (d.derived_id == derived_id) return d;
  throw std::out_of_range("no jet derivation for " + std::string(derived_id));
}

CheckRow jet_check(const JetDerivation& derivation, const Point<Rational>& point) {
  const IdentityEntry& entry = find_entry(derivation.derived_id);
  CheckRow row;
  row.id = derivation.derived_id + "/jet";
  for (const auto& p : entry.params) row.params.emplace_back(p.name, point[p.name].str());
  row.n = point.n;
  try {
    const JetValues jet = derived_identity_via_jets(derivation.base_id, derivation.spec, derivation.base_point(point));
    const Rational from_sum = derivation.transform(jet.lhs, point);
    const Rational from_closed = derivation.transform(jet.rhs, point);
    const Rational direct_lhs = entry.lhs(point);
    const Rational direct_rhs = entry.rhs(point);
    const Rational& direct_sum = derivation.sum_side_is_lhs ? direct_lhs : direct_rhs;
    const Rational& direct_closed = derivation.sum_side_is_lhs ? direct_rhs : direct_lhs;
    row.lhs = from_sum.str();
    row.rhs = direct_sum.str();
    const bool ok = from_sum == direct_sum && from_closed == direct_closed && from_sum == from_closed;
    row.status = ok ? Status::pass : Status::fail;
    if (!ok) row.reason = "jet path " + from_sum.str() + " / " + from_closed.str() + " vs direct " + direct_sum.str() +
                          " / " + direct_closed.str();
  } catch (const MathError& e) {
    row.status = Status::skipped;
    row.reason = e.what();
  }
  return row;
}

}  // namespace wzsum
