#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "wzsum/errors.hpp"
#include "wzsum/expr.hpp"
#include "wzsum/params.hpp"
#include "wzsum/poly.hpp"
#include "wzsum/ratfunc.hpp"

namespace wzsum {
namespace {

MultiPoly var(Var v) { return MultiPoly::variable(v); }

TEST(ParseTest, Shapes) {
  const Expr product = parse_expr("(n+1)*(k-j)");
  EXPECT_EQ(product.kind, Expr::Kind::multiply);
  EXPECT_EQ(product.args[0].kind, Expr::Kind::add);
  EXPECT_EQ(product.args[1].kind, Expr::Kind::subtract);

  const Expr neg = parse_expr("-(alpha - beta - n - 1)");
  ASSERT_EQ(neg.kind, Expr::Kind::negate);
  EXPECT_EQ(neg.args[0].kind, Expr::Kind::subtract);
  EXPECT_EQ(to_ratfunc(neg), to_ratfunc("-alpha + beta + n + 1"));
}

TEST(ParseTest, ErrorOffset) {
  try {
    (void)parse_expr("n+*k");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW((void)parse_expr("(n+1"), ParseError);
  EXPECT_THROW((void)parse_expr("n $ k"), ParseError);
  EXPECT_THROW((void)parse_expr("n^k"), ParseError);
  EXPECT_THROW((void)to_ratfunc("q + 1"), ParseError);
}

TEST(RatFuncTest, Canonicalization) {
  EXPECT_EQ(to_ratfunc("(n^2-1)/(n-1)"), RatFunc(var(Var::n) + MultiPoly(1)));
  EXPECT_EQ(to_ratfunc("1/2"), RatFunc(Rational(1, 2)));
  EXPECT_EQ(to_ratfunc("(n^2-1)/(n-1)").str(), "n + 1");

  const RatFunc cert = to_ratfunc("(k-j)*(alpha+k-n)/((k-n-1)*(alpha-beta-n-1))");
  EXPECT_EQ(cert.num().degree(), 2);
  EXPECT_EQ(cert.den().degree(), 2);
  EXPECT_EQ(cert.den().leading_coefficient(), Rational(1));
  EXPECT_EQ(cert, to_ratfunc("(j-k)*(n-k-alpha)/((1+n-k)*(1+n+beta-alpha))"));
}

TEST(RatFuncTest, ZeroTest) {
  EXPECT_TRUE(ratfunc_is_zero(to_ratfunc("(n+1) - (n+1)")));
  EXPECT_TRUE(ratfunc_is_zero(to_ratfunc("(n+k)^2 - n^2 - 2*n*k - k^2")));
  EXPECT_FALSE(ratfunc_is_zero(to_ratfunc("1/(n+1) - 1/(n+2)")));
  EXPECT_THROW((void)to_ratfunc("1/(n-n)"), ZeroDivisionError);
}

TEST(RatFuncTest, Evaluate) {
  EXPECT_EQ(to_ratfunc("(n+1)/(k+2)").evaluate({{"n", 1}, {"k", 0}}), Rational(1));
  const RatFunc cert = to_ratfunc("(k-j)*(alpha+k-n)/((k-n-1)*(alpha-beta-n-1))");
  const Assignment at{{"j", 0}, {"k", 1}, {"n", 1}, {"alpha", Rational(1, 2)}, {"beta", Rational(1, 3)}};
  EXPECT_EQ(cert.evaluate(at), Rational(3, 11));
  EXPECT_THROW((void)to_ratfunc("n/(n-1)").evaluate({{"n", 1}}), PoleError);
  EXPECT_THROW((void)to_ratfunc("n + k").evaluate({{"n", 1}}), std::exception);
}

TEST(PolyTest, GcdAndExactDivision) {
  const MultiPoly n = var(Var::n), k = var(Var::k), a = var(Var::alpha);
  const MultiPoly f = (n + k) * (n - a + MultiPoly(2));
  const MultiPoly g = (n + k) * (k * a + MultiPoly(Rational(1, 3)));
  EXPECT_EQ(gcd(f, g), n + k);
  EXPECT_EQ(exact_divide(f, n + k), n - a + MultiPoly(2));
  EXPECT_THROW((void)exact_divide(f, n + MultiPoly(7)), std::invalid_argument);
  EXPECT_EQ(gcd(MultiPoly(), MultiPoly()), MultiPoly());
  EXPECT_EQ(gcd(MultiPoly(6), n), MultiPoly(1));
}

TEST(PolyTest, RenderingIsParseable) {
  const MultiPoly p = MultiPoly(Rational(3, 2)) * var(Var::n).pow(2) * var(Var::k) - var(Var::alpha) + MultiPoly(1);
  EXPECT_EQ(p.str(), "3/2*n^2*k - alpha + 1");
  EXPECT_EQ(to_ratfunc(p.str()), RatFunc(p));
}

// Random expression generator over a few variables and small integers.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  Expr make(int depth) {
    const int pick = static_cast<int>(rng_() % (depth <= 0 ? 2 : 7));
    switch (pick) {
      case 0:
        return Expr::integer(static_cast<long>(rng_() % 10));
      case 1:
        return Expr::variable(kNames[rng_() % 4]);
      case 2:
        return Expr::negate(make(depth - 1));
      case 3:
        return Expr::binary(Expr::Kind::add, make(depth - 1), make(depth - 1));
      case 4:
        return Expr::binary(Expr::Kind::subtract, make(depth - 1), make(depth - 1));
      case 5:
        return Expr::binary(Expr::Kind::multiply, make(depth - 1), make(depth - 1));
      default:
        return Expr::power(make(depth - 1), rng_() % 3);
    }
  }

  /// A nonzero polynomial with small integer coefficients.
  RatFunc poly(int terms) {
    MultiPoly p(static_cast<long>(rng_() % 5) + 1);
    for (int i = 0; i < terms; ++i) {
      MultiPoly t(static_cast<long>(rng_() % 7) - 3);
      t *= MultiPoly::variable(static_cast<Var>(rng_() % 4)).pow(static_cast<unsigned>(rng_() % 3));
      p += t;
    }
    return p.is_zero() ? RatFunc(1) : RatFunc(p);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  static constexpr const char* kNames[] = {"n", "k", "j", "alpha"};
  std::mt19937_64 rng_;
};

TEST(PropertyTest, RenderParseRoundTrip) {
  ExprGen gen(2024);
  for (int i = 0; i < 100; ++i) {
    const Expr e = gen.make(5);
    const std::string text = render(e);
    EXPECT_EQ(parse_expr(text), e) << text;
  }
}

TEST(PropertyTest, CanonicalFormOfRewrites) {
  ExprGen gen(7);
  for (int i = 0; i < 50; ++i) {
    const RatFunc a = gen.poly(3), b = gen.poly(2), c = gen.poly(2);
    // Factored against expanded, and a common factor introduced and removed.
    const std::string factored = "(" + a.str() + ")*((" + b.str() + ") + (" + c.str() + "))";
    const RatFunc expanded = a * b + a * c;
    EXPECT_EQ(to_ratfunc(factored), expanded) << factored;
    const std::string padded = "((" + a.str() + ")*(" + c.str() + "))/((" + b.str() + ")*(" + c.str() + "))";
    EXPECT_EQ(to_ratfunc(padded), a / b) << padded;
  }
}

TEST(PropertyTest, SchwartzZippel) {
  ExprGen gen(99);
  RationalSampler sampler(1234);
  for (int i = 0; i < 30; ++i) {
    const RatFunc r = gen.poly(3) / gen.poly(2) - gen.poly(2);
    if (ratfunc_is_zero(r)) continue;
    bool nonzero_seen = false;
    for (int draw = 0; draw < 20 && !nonzero_seen; ++draw) {
      const Assignment at{{"n", sampler.next()}, {"k", sampler.next()}, {"j", sampler.next()}, {"alpha", sampler.next()}};
      try {
        nonzero_seen = !r.evaluate(at).is_zero();
      } catch (const PoleError&) {
      }
    }
    EXPECT_TRUE(nonzero_seen) << r.str();
  }
}

}  // namespace
}  // namespace wzsum
