#include "wzsum/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wzsum/errors.hpp"

namespace wzsum {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"n",    "k", "j", "alpha",
                                                              "beta", "s", "t", "p"};

Monomial zero_monomial() { return Monomial{}; }

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(zero_monomial(), c);
}

MultiPoly MultiPoly::variable(Var v) {
  Monomial m{};
  m[idx(v)] = 1;
  return monomial(m, Rational(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(zero_monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[idx(v)]));
  return d;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kNumVars; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
  std::map<int, MultiPoly> parts = coefficients_in(v);
  MultiPoly result;
  MultiPoly power(1);
  int current = 0;
  for (const auto& [e, coeff] : parts) {
    while (current < e) {
      power *= replacement;
      ++current;
    }
    result += coeff * power;
  }
  return result;
}

MultiPoly MultiPoly::shifted(Var v, const Rational& shift) const {
  if (shift.is_zero()) return *this;
  return substitute(v, variable(v) + MultiPoly(shift));
}

Rational MultiPoly::evaluate(const Assignment& values) const {
  std::array<std::optional<Rational>, kNumVars> table;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    auto it = values.find(kVarNames[i]);
    if (it != values.end()) table[i] = it->second;
  }
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (!table[i]) throw std::invalid_argument("variable '" + std::string(kVarNames[i]) + "' is not assigned");
      term *= wzsum::pow(*table[i], m[i]);
    }
    total += term;
  }
  return total;
}

std::map<int, MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::map<int, MultiPoly> parts;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const int e = rest[idx(v)];
    rest[idx(v)] = 0;
    parts[e].add_term(rest, c);
  }
  return parts;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_str(m);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw ZeroDivisionError("polynomial division by zero");
  if (b.is_constant()) {
    MultiPoly q = a;
    q *= inverse(b.leading_coefficient());
    return q;
  }
  MultiPoly quotient;
  MultiPoly rest = a;
  const Monomial& lb = b.leading_monomial();
  const Rational inv_lc = inverse(b.leading_coefficient());
  while (!rest.is_zero()) {
    const Monomial& lr = rest.leading_monomial();
    Monomial q;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (lr[i] < lb[i]) throw std::invalid_argument("polynomial division is not exact");
      q[i] = static_cast<std::uint16_t>(lr[i] - lb[i]);
    }
    const MultiPoly t = MultiPoly::monomial(q, rest.leading_coefficient() * inv_lc);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

MultiPoly make_monic(const MultiPoly& a) {
  if (a.is_zero()) return a;
  MultiPoly r = a;
  r *= inverse(a.leading_coefficient());
  return r;
}

namespace {

std::optional<Var> main_variable(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const Var v = static_cast<Var>(i);
    if (a.contains(v) || b.contains(v)) return v;
  }
  return std::nullopt;
}

// gcd of the coefficients of a with respect to v.
MultiPoly content_in(const MultiPoly& a, Var v) {
  MultiPoly g;
  for (const auto& [e, coeff] : a.coefficients_in(v)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) return MultiPoly(1);
  }
  return g;
}

// a scaled to integer coefficients with unit content and positive leading term.
MultiPoly numeric_primitive(const MultiPoly& a) {
  if (a.is_zero()) return a;
  mpz_class den = 1, num = 0;
  for (const auto& [m, c] : a.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
  }
  mpq_class q(den, num);
  q.canonicalize();
  Rational scale{q};
  if (a.leading_coefficient().sign() < 0) scale = -scale;
  MultiPoly r = a;
  r *= scale;
  return r;
}

MultiPoly primitive_part_in(const MultiPoly& a, Var v) {
  if (a.is_zero()) return a;
  return exact_divide(a, content_in(a, v));
}

MultiPoly leading_coefficient_in(const MultiPoly& a, Var v) {
  auto parts = a.coefficients_in(v);
  return parts.rbegin()->second;
}

// Pseudo-remainder of a by b in v; b must have positive degree in v.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
  const int db = b.degree_in(v);
  const MultiPoly lc = leading_coefficient_in(b, v);
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    Monomial shift{};
    shift[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(dr - db);
    r = lc * r - leading_coefficient_in(r, v) * MultiPoly::monomial(shift, Rational(1)) * b;
  }
  return r;
}

using UniPoly = std::vector<Rational>;  // coefficients by ascending degree

void trim(UniPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Degree of gcd(a, b) over Q; -1 when both are zero.
int univariate_gcd_degree(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const Rational inv = inverse(b.back());
    while (a.size() >= b.size()) {
      const Rational f = a.back() * inv;
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Image of a in Q[v] with every other variable set from point.
UniPoly specialize(const MultiPoly& a, Var v, const std::array<Rational, kNumVars>& point) {
  UniPoly out(static_cast<std::size_t>(a.degree_in(v)) + 1);
  for (const auto& [m, c] : a.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (i != idx(v) && m[i] > 0) term *= wzsum::pow(point[i], m[i]);
    out[m[idx(v)]] += term;
  }
  return out;
}

// True only when gcd(a, b) is certainly constant. For each shared variable v the
// other variables are specialised where lc_v(a) does not vanish; lc_v(gcd) divides
// lc_v(a), so the image of the gcd keeps its v-degree and divides both images.
bool provably_coprime(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t vi = 0; vi < kNumVars; ++vi) {
    const Var v = static_cast<Var>(vi);
    if (!a.contains(v) || !b.contains(v)) continue;
    const MultiPoly lc = a.coefficients_in(v).rbegin()->second;
    bool settled = false;
    for (long attempt = 0; attempt < 4 && !settled; ++attempt) {
      std::array<Rational, kNumVars> point;
      Assignment values;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        point[i] = Rational(static_cast<long>(7 + 13 * i + 101 * attempt), static_cast<long>(3 + i + attempt));
        values.emplace(std::string(kVarNames[i]), point[i]);
      }
      if (lc.evaluate(values).is_zero()) continue;
      if (univariate_gcd_degree(specialize(a, v, point), specialize(b, v, point)) != 0) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (provably_coprime(a, b)) return MultiPoly(1);

  const Var v = *main_variable(a, b);
  if (!a.contains(v)) return gcd(a, content_in(b, v));
  if (!b.contains(v)) return gcd(content_in(a, v), b);

  const MultiPoly ca = content_in(a, v);
  const MultiPoly cb = content_in(b, v);
  MultiPoly pa = numeric_primitive(exact_divide(a, ca));
  MultiPoly pb = numeric_primitive(exact_divide(b, cb));
  const MultiPoly content = gcd(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = MultiPoly();
    } else if (!r.contains(v)) {
      // A nonzero remainder free of v: the primitive parts are coprime.
      pa = MultiPoly(1);
      pb = MultiPoly();
    } else {
      pb = numeric_primitive(primitive_part_in(r, v));
    }
  }
  const MultiPoly prim = pa.contains(v) ? primitive_part_in(pa, v) : MultiPoly(1);
  return make_monic(content * prim);
}

}  // namespace wzsum
