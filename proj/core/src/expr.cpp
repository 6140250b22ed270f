#include "wzsum/expr.hpp"

#include <cctype>

#include "wzsum/errors.hpp"

namespace wzsum {

Expr Expr::integer(mpz_class v) {
  Expr e;
  e.kind = Kind::integer;
  e.value = std::move(v);
  return e;
}

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind = Kind::variable;
  e.name = std::move(name);
  return e;
}

Expr Expr::negate(Expr inner) {
  Expr e;
  e.kind = Kind::negate;
  e.offset = inner.offset;
  e.args.push_back(std::move(inner));
  return e;
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = op;
  e.offset = lhs.offset;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::power(Expr base, unsigned long exponent) {
  Expr e;
  e.kind = Kind::power;
  e.offset = base.offset;
  e.value = exponent;
  e.args.push_back(std::move(base));
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::integer:
      return a.value == b.value;
    case Expr::Kind::variable:
      return a.name == b.name;
    case Expr::Kind::power:
      if (a.value != b.value) return false;
      break;
    default:
      break;
  }
  return a.args == b.args;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Expr::Kind::add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = Expr::binary(Expr::Kind::subtract, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Expr::Kind::multiply, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = Expr::binary(Expr::Kind::divide, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      Expr e = Expr::negate(unary());
      e.offset = at;
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    while (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      mpz_class exponent(std::string(text_.substr(start, pos_ - start)), 10);
      if (!exponent.fits_ulong_p() || exponent > 4096) {
        pos_ = start;
        fail("exponent too large");
      }
      base = Expr::power(std::move(base), exponent.get_ui());
    }
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected expression, found end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Expr e = Expr::integer(mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
      e.offset = start;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      Expr e = Expr::variable(std::string(text_.substr(start, pos_ - start)));
      e.offset = start;
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::string_view("+-*/^)").find(c) != std::string_view::npos)
      fail("expected expression, found '" + std::string(1, c) + "'");
    fail("unknown character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength used for parenthesization.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::subtract:
      return 1;
    case Expr::Kind::multiply:
    case Expr::Kind::divide:
      return 2;
    case Expr::Kind::negate:
      return 3;
    case Expr::Kind::power:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_precedence) {
  std::string s = render(e);
  return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer:
      return e.value.get_str();
    case Expr::Kind::variable:
      return e.name;
    case Expr::Kind::negate:
      return "-" + wrap(e.args[0], 3);
    case Expr::Kind::add:
      return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
    case Expr::Kind::subtract:
      return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
    case Expr::Kind::multiply:
      return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
    case Expr::Kind::divide:
      return wrap(e.args[0], 2) + "/" + wrap(e.args[1], 3);
    case Expr::Kind::power:
      return wrap(e.args[0], 4) + "^" + e.value.get_str();
  }
  return {};
}

RatFunc to_ratfunc(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer:
      return RatFunc(Rational(e.value));
    case Expr::Kind::variable: {
      auto v = var_from_name(e.name);
      if (!v) throw ParseError("unknown variable '" + e.name + "' at offset " + std::to_string(e.offset), e.offset);
      return RatFunc(MultiPoly::variable(*v));
    }
    case Expr::Kind::negate:
      return -to_ratfunc(e.args[0]);
    case Expr::Kind::add:
      return to_ratfunc(e.args[0]) + to_ratfunc(e.args[1]);
    case Expr::Kind::subtract:
      return to_ratfunc(e.args[0]) - to_ratfunc(e.args[1]);
    case Expr::Kind::multiply:
      return to_ratfunc(e.args[0]) * to_ratfunc(e.args[1]);
    case Expr::Kind::divide:
      return to_ratfunc(e.args[0]) / to_ratfunc(e.args[1]);
    case Expr::Kind::power:
      return to_ratfunc(e.args[0]).pow(static_cast<long>(e.value.get_ui()));
  }
  return {};
}

}  // namespace wzsum
