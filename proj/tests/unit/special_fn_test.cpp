#include <gtest/gtest.h>

#include "wzsum/errors.hpp"
#include "wzsum/legendre.hpp"
#include "wzsum/params.hpp"

namespace wzsum {
namespace {

TEST(LegendreTest, Values) {
  EXPECT_EQ(legendre(0, Rational(7, 3)), Rational(1));
  EXPECT_EQ(legendre(1, Rational(7, 3)), Rational(7, 3));
  EXPECT_EQ(legendre(2, Rational(5, 4)), Rational(59, 32));
  EXPECT_EQ(legendre(3, Rational(1, 2)), Rational(-7, 16));
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(legendre(n, Rational(1)), Rational(1));
}

TEST(LegendreTest, Representations) {
  EXPECT_EQ(legendre_product_form(1, Rational(2)), Rational(5, 2));
  EXPECT_EQ(legendre_product_form(0, Rational(-3, 7)), Rational(1));
  EXPECT_EQ(legendre_product_form(2, Rational(2)), Rational(59, 8));
  EXPECT_EQ(legendre_new_repr(1, Rational(2)), Rational(5, 4));
  EXPECT_EQ(legendre_new_repr(9, Rational(1)), Rational(1));
  EXPECT_EQ(legendre_new_repr(2, Rational(2)), Rational(59, 32));
}

TEST(LegendreTest, Inversion) {
  auto [l1, r1] = legendre_inversion_check(1, Rational(2));
  EXPECT_EQ(l1, Rational(-3, 2));
  EXPECT_EQ(r1, Rational(-3, 2));
  auto [l0, r0] = legendre_inversion_check(0, Rational(5, 9));
  EXPECT_EQ(l0, Rational(1));
  EXPECT_EQ(r0, Rational(1));
  auto [l2, r2] = legendre_inversion_check(2, Rational(2));
  EXPECT_EQ(l2, Rational(27, 8));
  EXPECT_EQ(r2, Rational(27, 8));
}

TEST(LegendreTest, ZeroTRejected) {
  EXPECT_THROW((void)legendre_new_repr(2, Rational(0)), DomainError);
  EXPECT_THROW((void)legendre_product_form(2, Rational(0)), DomainError);
  EXPECT_THROW((void)legendre_inversion_check(2, Rational(0)), DomainError);
}

TEST(LegendreTest, SeededGrid) {
  const auto draws = draw_assignments({"t"}, 20, 8, [](const Assignment& a) -> std::optional<std::string> {
    if (a.at("t").is_zero()) return "t = 0";
    return std::nullopt;
  });
  for (const auto& draw : draws) {
    ASSERT_TRUE(draw.has_value());
    const Rational t = draw->at("t");
    const Rational x = legendre_argument(t);
    for (long n = 0; n <= 50; ++n) {
      const Rational p = legendre(n, x);
      EXPECT_EQ(legendre_new_repr(n, t), p) << "n=" << n << " t=" << t;
      EXPECT_EQ(legendre_product_form(n, t), pow(t, n) * p);
      const auto [lhs, rhs] = legendre_inversion_check(n, t);
      EXPECT_EQ(lhs, rhs);
      if (n <= 30) EXPECT_EQ(legendre_new_repr(n, inverse(t)), legendre_new_repr(n, t));
    }
  }
}

TEST(LegendreTest, CentralBinomial) {
  EXPECT_EQ(central_binomial(0), Rational(1));
  EXPECT_EQ(central_binomial(5), Rational(252));
  EXPECT_EQ(central_binomial(30), binom_int(60, 30));
}

}  // namespace
}  // namespace wzsum
