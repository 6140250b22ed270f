#include <stdexcept>

#include "wzsum/catalog.hpp"
#include "wzsum/params.hpp"

namespace wzsum {

template <Scalar S>
const S& Point<S>::operator[](std::string_view name) const {
  const auto it = values.find(name);
  if (it == values.end()) throw std::out_of_range("missing parameter " + std::string(name));
  return it->second;
}

template <Scalar S>
long Point<S>::index(std::string_view name) const {
  const Rational& v = constant_part((*this)[name]);
  if (!v.is_integer()) throw DomainError("index parameter " + std::string(name) + " must be an integer");
  return v.to_long();
}

template struct Point<Rational>;
template struct Point<Jet2>;

std::vector<std::string> IdentityEntry::rational_params() const {
  std::vector<std::string> out;
  for (const auto& p : params)
    if (p.kind == ParamDef::Kind::rational) out.push_back(p.name);
  return out;
}

std::vector<std::string> IdentityEntry::index_params() const {
  std::vector<std::string> out;
  for (const auto& p : params)
    if (p.kind == ParamDef::Kind::index) out.push_back(p.name);
  return out;
}

std::vector<std::string> IdentityEntry::param_names() const {
  std::vector<std::string> out;
  for (const auto& p : params) out.push_back(p.name);
  return out;
}

namespace {

using Kind = ParamDef::Kind;

ParamDef rat(std::string name) { return {std::move(name), Kind::rational}; }
ParamDef idx(std::string name) { return {std::move(name), Kind::index}; }

Exclusion exclude_negative_integers(std::initializer_list<const char*> names) {
  std::vector<const char*> keep(names);
  return [keep](const Point<Rational>& P) -> std::optional<std::string> {
    for (const char* name : keep)
      if (is_negative_integer(P[name])) return std::string(name) + " is a negative integer";
    return std::nullopt;
  };
}

Exclusion exclude_digamma_poles() {
  return [](const Point<Rational>& P) -> std::optional<std::string> {
    const Rational& s = P["s"];
    if (s.is_integer() && s.sign() >= 0 && s.to_long() < P.n) return "s in {0..n-1} (digamma pole)";
    return std::nullopt;
  };
}

Exclusion exclude_zero_t() {
  return [](const Point<Rational>& P) -> std::optional<std::string> {
    if (P["t"].is_zero()) return "t = 0";
    return std::nullopt;
  };
}

Exclusion exclude_alzer_kouba_poles() {
  return [](const Point<Rational>& P) -> std::optional<std::string> {
    const Rational shifted = P["lambda"] - Rational(1, 2);
    if (shifted.is_integer() && shifted.sign() >= 0 && shifted.to_long() < P.n)
      return "lambda - 1/2 in {0..n-1} (pole)";
    return std::nullopt;
  };
}

struct Blueprint {
  const char* id;
  const char* reference;
  std::vector<ParamDef> params;
  long default_n_max;
  Exclusion exclude;
};

std::vector<IdentityEntry> build() {
  constexpr long kParametric = 30;
  constexpr long kHarmonic = 100;
  constexpr long kLegendre = 50;
  // clang-format off
  const std::vector<Blueprint> blueprints = {
    {"ID01", "Simons: sum C(n,k)C(n+k,k)x^k = sum (-1)^(n+k)C(n,k)C(n+k,k)(x+1)^k", {rat("x")}, kParametric, {}},
    {"ID02", "Munarini, two variables: sum C(a,n-k)C(b+k,k)x^k y^(n-k) = sum (-1)^(n+k)C(b-a+n,n-k)C(b+k,k)(x+y)^k y^(n-k)",
     {rat("alpha"), rat("beta"), rat("x"), rat("y")}, kParametric, exclude_negative_integers({"alpha", "beta"})},
    {"ID03", "Munarini: sum C(a,n-k)C(b+k,k)x^k = sum (-1)^(n+k)C(b-a+n,n-k)C(b+k,k)(x+1)^k",
     {rat("alpha"), rat("beta"), rat("x")}, kParametric, exclude_negative_integers({"alpha", "beta"})},
    {"ID04", "coefficients at x=-1: sum (-1)^(k+j)C(b+k,k)C(k,j)C(a,n-k) = (-1)^(n+j)C(b+j,j)C(b-a+n,n-j)",
     {rat("alpha"), rat("beta"), idx("j")}, kParametric, exclude_negative_integers({"alpha", "beta"})},
    {"ID05", "Alzer-Kouba: 4^n C(l,n) = C(2l,n) sum C(n,k)C(n-l-1/2,k)/C(k-l-1/2,k)", {rat("lambda")}, kParametric,
     exclude_alzer_kouba_poles()},
    {"ID06", "sum C(n,k)C(s,k)/C(t+k,k) = prod_{i=1..n} (s+t+i)/(t+i)", {rat("s"), rat("t")}, kParametric,
     exclude_negative_integers({"t"})},
    {"ID07", "sum (-1)^(n+k)C(n,k)C(s+k,k)C(k,p) = C(n,p)C(s+p,n)", {rat("s"), rat("p")}, kParametric, {}},
    {"ID08", "sum C(n,k)C(b+k,k)x^k = sum (-1)^(n+k)C(n,k)C(b+k,n)(1+x)^k", {rat("beta"), rat("x")}, kParametric, {}},
    {"ID09", "sum (-1)^k C(n,k)C(b+k,n) = (-1)^n", {rat("beta")}, kParametric, {}},
    {"ID10", "sum (-1)^k C(n,k)C(b+k,k) = (-1)^n C(b,n)", {rat("beta")}, kParametric, {}},
    {"ID11", "H_n = 1/2 sum (-1)^(n+k)C(n,k)C(n+k,k)H_(n+k)", {}, kHarmonic, {}},
    {"ID12", "sum C(n,k)C(2k,k)x^k/4^k = 4^-n sum C(2k,k)C(2n-2k,n-k)(1+x)^k", {rat("x")}, kParametric, {}},
    {"ID13", "Legendre: P_n((t^2+1)/(2t)) = t^-n sum C(n,k)C(2k,k)((t^2-1)/4)^k", {rat("t")}, kLegendre,
     exclude_zero_t()},
    {"ID14", "Legendre inversion: sum (-1)^k C(n,k)P_k((t^2+1)/(2t))t^k = C(2n,n)((1-t^2)/4)^n", {rat("t")}, kLegendre,
     exclude_zero_t()},
    {"ID15", "sum (-1)^(n+k)C(n,k)C(s+k,k)H_k = C(s,n)(H_n + psi(s+1) - psi(s-n+1))", {rat("s")}, kParametric,
     exclude_digamma_poles()},
    {"ID16", "H_n = 1/2 sum (-1)^(n+k)C(n,k)C(n+k,k)H_k", {}, kHarmonic, {}},
    {"ID17", "sum (-1)^k C(n,k)C(2k,k)H_k/4^k = C(2n,n)(H_n - H_2n)/2^(2n-1)", {}, kHarmonic, {}},
    {"ID18", "H_n^2 = 1/4 sum (-1)^(n+k)C(n,k)C(n+k,k)(H_k^2 + H2_k)", {}, kHarmonic, {}},
    {"ID18G", "sum (-1)^(n+k)C(n,k)C(s+k,k)(H_k^2 + H2_k) = C(s,n)((H_n + psi(s+1) - psi(s-n+1))^2 + H2_n + psi'(s+1) - psi'(s-n+1))",
     {rat("s")}, kParametric, exclude_digamma_poles()},
    {"ID19", "sum C(n,k)C(s+p,k)C(k,p) = C(n,p)C(s+n,n)", {rat("s"), rat("p")}, kParametric, {}},
    {"ID20", "sum C(2n,2k)C(2n-2k,n-k)4^k = C(4n,2n)", {}, kParametric, {}},
    {"ID20A", "sum 4^k C(n,k)^2/C(2k,k) = C(4n,2n)/C(2n,n)", {}, kParametric, {}},
    {"ID21", "sum C(s+k,k)C(2n-2k,n-k)4^k = C(2n,n)C(2n+2s+1,2n)/C(n+s,n)", {rat("s")}, kParametric,
     exclude_negative_integers({"s"})},
    {"ID22", "sum C(2k,k)H_(n-k)/4^k = (2n+1)/4^n C(2n,n)(2H_(2n+1) - H_n - 2)", {}, kHarmonic, {}},
    {"ID23", "sum k C(n,k)^2 = n/2 C(2n,n)", {}, kParametric, {}},
    {"ID24", "sum C(n,k)^2 H_k = C(2n,n)(2H_n - H_2n)", {}, kHarmonic, {}},
    {"ID25", "sum C(n,k)^2 H_k H_(n-k) = C(2n,n)((H_2n - 2H_n)^2 + H2_n - H2_2n)", {}, kHarmonic, {}},
    {"ID26", "sum C(n,k)^2 (H_k^2 + H2_k) = C(2n,n)((H_2n - 2H_n)^2 + 2H2_n - H2_2n)", {}, kHarmonic, {}},
  };
  // clang-format on

  std::vector<IdentityEntry> entries;
  for (const auto& b : blueprints) {
    IdentityEntry e;
    e.id = b.id;
    e.reference = b.reference;
    e.params = b.params;
    e.default_n_max = b.default_n_max;
    e.exclude = b.exclude;
    e.lhs = lhs_table<Rational>().at(e.id);
    e.rhs = rhs_table<Rational>().at(e.id);
    e.lhs_jet = lhs_table<Jet2>().at(e.id);
    e.rhs_jet = rhs_table<Jet2>().at(e.id);
    entries.push_back(std::move(e));
  }
  return entries;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = build();
  return entries;
}

const IdentityEntry& find_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::out_of_range("unknown identity " + std::string(id));
}

IdentityEntry mutated_entry(const IdentityEntry& entry, std::string_view mutation) {
  IdentityEntry out = entry;
  constexpr std::string_view kScale = "scale-rhs:";
  if (mutation.starts_with(kScale)) {
    const Rational factor = Rational::parse(mutation.substr(kScale.size()));
    out.rhs = [f = entry.rhs, factor](const Point<Rational>& P) { return f(P) * factor; };
    out.rhs_jet = [f = entry.rhs_jet, factor](const Point<Jet2>& P) { return f(P) * Jet2(factor); };
    return out;
  }
  const std::string key = entry.id + ":" + std::string(mutation);
  const auto& rational = rhs_mutations<Rational>();
  const auto it = rational.find(key);
  if (it == rational.end()) throw std::invalid_argument("unknown mutation '" + std::string(mutation) + "' for " + entry.id);
  out.rhs = it->second;
  out.rhs_jet = rhs_mutations<Jet2>().at(key);
  return out;
}

namespace {

std::vector<std::pair<std::string, std::string>> render_params(const IdentityEntry& entry,
                                                               const Point<Rational>& point) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : entry.params) out.emplace_back(p.name, point[p.name].str());
  return out;
}

}  // namespace

CheckRow check_point(const IdentityEntry& entry, const Point<Rational>& point) {
  CheckRow row;
  row.id = entry.id;
  row.params = render_params(entry, point);
  row.n = point.n;
  if (entry.exclude) {
    if (auto reason = entry.exclude(point)) {
      row.status = Status::skipped;
      row.reason = "excluded: " + *reason;
      return row;
    }
  }
  try {
    const Rational l = entry.lhs(point);
    row.lhs = l.str();
    const Rational r = entry.rhs(point);
    row.rhs = r.str();
    row.status = l == r ? Status::pass : Status::fail;
    if (row.status == Status::fail) row.reason = "lhs != rhs";
  } catch (const MathError& e) {
    row.status = Status::skipped;
    row.reason = e.what();
  }
  return row;
}

std::uint64_t cell_seed(std::uint64_t seed, std::string_view id, long n) {
  return splitmix64(splitmix64(seed ^ fnv1a(id)) + static_cast<std::uint64_t>(n));
}

std::vector<CheckRow> check_identity(const IdentityEntry& entry, const CheckConfig& config) {
  const long n_max = config.n_max.value_or(entry.default_n_max);
  const auto names = entry.rational_params();
  const auto indices = entry.index_params();
  std::vector<CheckRow> rows;
  for (long n = entry.n_min; n <= n_max; ++n) {
    std::vector<std::optional<Assignment>> draws;
    if (names.empty()) {
      draws.emplace_back(Assignment{});
    } else {
      const Rejector reject = [&](const Assignment& a) -> std::optional<std::string> {
        if (!entry.exclude) return std::nullopt;
        Point<Rational> probe{n, a};
        for (const auto& j : indices) probe.values[j] = Rational(0);
        return entry.exclude(probe);
      };
      draws = draw_assignments(names, config.samples, cell_seed(config.seed, entry.id, n), reject);
    }
    for (const auto& draw : draws) {
      if (!draw) {
        CheckRow row;
        row.id = entry.id;
        row.n = n;
        row.status = Status::skipped;
        row.reason = "no admissible draw after 1000 attempts";
        rows.push_back(std::move(row));
        continue;
      }
      Point<Rational> point{n, *draw};
      if (indices.empty()) {
        rows.push_back(check_point(entry, point));
        continue;
      }
      // One index parameter per entry is all the catalog needs.
      for (long j = 0; j <= n; ++j) {
        point.values[indices.front()] = Rational(j);
        rows.push_back(check_point(entry, point));
      }
    }
  }
  return rows;
}

}  // namespace wzsum
