#include "wzsum/wz.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "wzsum/errors.hpp"
#include "wzsum/expr.hpp"

namespace wzsum {

RatFunc certificate_residual(const WZPair& pair) {
  const RatFunc r_n = pair.term.shift_ratio(Var::n);
  const RatFunc r_k = pair.term.shift_ratio(Var::k);
  const RatFunc& c = pair.certificate;
  return RatFunc(pair.orientation) * (r_n - RatFunc(1)) - c.shifted(Var::k, Rational(1)) * r_k + c;
}

bool VerificationReport::all_pass() const {
  if (!symbolic_ok) return false;
  for (const auto& r : rows)
    if (r.status == Status::fail) return false;
  return true;
}

namespace {

std::vector<std::pair<std::string, std::string>> render_params(const Assignment& a,
                                                               const std::vector<Var>& order) {
  std::vector<std::pair<std::string, std::string>> out;
  for (Var v : order) {
    auto it = a.find(var_name(v));
    if (it != a.end()) out.emplace_back(std::string(var_name(v)), it->second.str());
  }
  return out;
}

std::vector<Var> row_param_order(const WZPair& pair) {
  std::vector<Var> order = pair.params;
  order.insert(order.end(), pair.indices.begin(), pair.indices.end());
  return order;
}

// Calls fn for every assignment of the extra indices to 0..n.
void for_each_index(const WZPair& pair, long n, Assignment& a,
                    const std::function<void(const Assignment&)>& fn, std::size_t depth = 0) {
  if (depth == pair.indices.size()) {
    fn(a);
    return;
  }
  const std::string name(var_name(pair.indices[depth]));
  for (long i = 0; i <= n; ++i) {
    a[name] = Rational(i);
    for_each_index(pair, n, a, fn, depth + 1);
  }
  a.erase(name);
}

CheckRow exact_row(std::string id, const WZPair& pair, const Assignment& a, long n,
                   const std::function<Rational()>& lhs, const Rational& rhs) {
  CheckRow row;
  row.id = std::move(id);
  row.params = render_params(a, row_param_order(pair));
  row.n = n;
  row.rhs = rhs.str();
  try {
    const Rational value = lhs();
    row.lhs = value.str();
    row.status = value == rhs ? Status::pass : Status::fail;
  } catch (const MathError& e) {
    row.lhs = "";
    row.status = Status::skipped;
    row.reason = e.what();
  }
  return row;
}

Rational certificate_term(const WZPair& pair, const Assignment& at) {
  const Rational t = pair.term.evaluate(at);
  if (t.is_zero()) return t;
  return pair.certificate.evaluate(at) * t;
}

CheckRow skipped_draw(std::string id, long n) {
  CheckRow row;
  row.id = std::move(id);
  row.n = n;
  row.status = Status::skipped;
  row.reason = "no admissible parameter draw after 1000 attempts";
  return row;
}

}  // namespace

std::vector<std::optional<Assignment>> draw_pair_params(const WZPair& pair, int samples, std::uint64_t seed) {
  std::vector<std::string> names;
  for (Var v : pair.params) names.emplace_back(var_name(v));
  // An integer in a lower argument turns binomials polynomial, and the term can
  // then be zero over zero (binom(k,p)/binom(n,p) for integer p > n).
  std::set<std::string> lower;
  for (const auto& f : pair.term.factors())
    for (Var v : pair.params)
      if (f.bottom.coefficient(v) != 0) lower.emplace(var_name(v));
  return draw_assignments(names, samples, seed, [lower](const Assignment& a) -> std::optional<std::string> {
    for (const auto& [name, value] : a) {
      if (is_negative_integer(value)) return name + " is a negative integer";
      if (value.is_integer() && lower.contains(name)) return name + " is an integer lower argument";
    }
    return std::nullopt;
  });
}

VerificationReport verify_wz_pair(const WZPair& pair, long n_max, int samples, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("verify_wz_pair needs n_max >= 1");
  VerificationReport report;
  report.pair = pair.name;
  report.residual = certificate_residual(pair);
  report.symbolic_ok = ratfunc_is_zero(report.residual);
  {
    CheckRow row;
    row.id = pair.name + "/symbolic";
    row.lhs = report.residual.str();
    row.rhs = "0";
    row.status = report.symbolic_ok ? Status::pass : Status::fail;
    if (!report.symbolic_ok) row.reason = "certificate residual is not the zero rational function";
    report.rows.push_back(std::move(row));
  }

  const auto draws = draw_pair_params(pair, samples, seed);

  for (std::size_t d = 0; d < draws.size(); ++d) {
    if (!draws[d]) {
      report.rows.push_back(skipped_draw(pair.name + "/base", 0));
      continue;
    }
    Assignment a = *draws[d];
    a["n"] = 0;
    a["k"] = 0;
    for (Var v : pair.indices) a[std::string(var_name(v))] = 0;
    report.rows.push_back(
        exact_row(pair.name + "/base", pair, a, 0, [&] { return pair.term.evaluate(a); }, Rational(1)));
  }

  for (long n = 0; n <= n_max; ++n) {
    for (const auto& draw : draws) {
      if (!draw) {
        report.rows.push_back(skipped_draw(pair.name + "/boundary", n));
        continue;
      }
      Assignment a = *draw;
      a["n"] = n;
      for_each_index(pair, n, a, [&](const Assignment& point) {
        Assignment at = point;
        at["k"] = 0;
        report.rows.push_back(exact_row(pair.name + "/boundary-k0", pair, at, n,
                                        [&] { return certificate_term(pair, at); }, Rational(0)));
        at["k"] = n + 2;
        report.rows.push_back(exact_row(pair.name + "/boundary-k(n+2)", pair, at, n,
                                        [&] { return certificate_term(pair, at); }, Rational(0)));
        at["k"] = n + 1;
        report.rows.push_back(exact_row(pair.name + "/edge-k(n+1)", pair, at, n,
                                        [&] { return pair.term.evaluate(at); }, Rational(0)));
      });
    }
  }
  return report;
}

std::vector<CheckRow> telescoping_rows(const WZPair& pair, long n_max,
                                       const std::vector<std::optional<Assignment>>& draws) {
  std::vector<CheckRow> rows;
  const std::string id = pair.name + "/telescoped-sum";
  for (long n = 0; n <= n_max; ++n) {
    for (const auto& draw : draws) {
      if (!draw) {
        rows.push_back(skipped_draw(id, n));
        continue;
      }
      Assignment a = *draw;
      a["n"] = n;
      for_each_index(pair, n, a, [&](const Assignment& point) {
        rows.push_back(exact_row(id, pair, point, n,
                                 [&] {
                                   Assignment at = point;
                                   Rational total(0);
                                   for (long k = 0; k <= n; ++k) {
                                     at["k"] = k;
                                     total += pair.term.evaluate(at);
                                   }
                                   return total;
                                 },
                                 Rational(1)));
      });
    }
  }
  return rows;
}

std::vector<DrawOutcome> telescoping_sum_check(const WZPair& pair, long n_max,
                                               const std::vector<std::optional<Assignment>>& draws) {
  std::vector<DrawOutcome> outcomes(draws.size());
  for (std::size_t d = 0; d < draws.size(); ++d) {
    if (!draws[d]) {
      outcomes[d] = {Status::skipped, "no admissible parameter draw"};
      continue;
    }
    const auto rows = telescoping_rows(pair, n_max, {draws[d]});
    for (const auto& row : rows) {
      if (row.status == Status::fail) {
        outcomes[d] = {Status::fail, "sum != 1 at n=" + std::to_string(*row.n)};
        break;
      }
      if (row.status == Status::skipped && outcomes[d].status == Status::pass)
        outcomes[d] = {Status::skipped, "skipped: pole (" + row.reason + ")"};
    }
  }
  return outcomes;
}

WZPair mutated_pair(const WZPair& pair, std::string_view mutation) {
  WZPair out = pair;
  const auto colon = mutation.find(':');
  const std::string_view kind = mutation.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : mutation.substr(colon + 1);
  if (kind == "scale-cert" && !arg.empty()) {
    out.certificate *= RatFunc(Rational::parse(arg));
  } else if (kind == "add-cert" && !arg.empty()) {
    out.certificate += to_ratfunc(arg);
  } else if (kind == "flip-exp" && !arg.empty()) {
    const long i = Rational::parse(arg).to_long();
    auto& factors = out.term.mutable_factors();
    if (i < 0 || i >= static_cast<long>(factors.size()))
      throw std::invalid_argument("flip-exp index out of range: " + std::string(arg));
    factors[static_cast<std::size_t>(i)].exponent *= -1;
  } else if (kind == "flip-orientation" && arg.empty()) {
    out.orientation = -out.orientation;
  } else {
    throw std::invalid_argument("unknown mutation '" + std::string(mutation) + "'");
  }
  out.name += "~" + std::string(mutation);
  return out;
}

}  // namespace wzsum
