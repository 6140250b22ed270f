#include <gtest/gtest.h>

#include <random>

#include "wzsum/certificate_file.hpp"
#include "wzsum/errors.hpp"
#include "wzsum/expr.hpp"
#include "wzsum/wz.hpp"

namespace wzsum {
namespace {

const std::filesystem::path kFixtures = WZSUM_FIXTURES_DIR;

WZPair fixture(const char* name) { return load_certificate(kFixtures / (std::string(name) + ".wz")); }

TEST(ShiftRatioTest, Examples) {
  const HyperTerm nk = parse_hyperterm("sign(0) * 1 * prod binom(n, k)^1");
  EXPECT_EQ(shift_ratio(nk, Var::n), to_ratfunc("(n+1)/(n+1-k)"));
  EXPECT_EQ(shift_ratio(nk, Var::k), to_ratfunc("(n-k)/(k+1)"));
  const HyperTerm beta = parse_hyperterm("sign(n + k) * 1 * prod binom(beta + k, k)^1");
  EXPECT_EQ(shift_ratio(beta, Var::k), to_ratfunc("-(beta+k+1)/(k+1)"));
}

TEST(ShiftRatioTest, NonHypergeometricArgument) {
  EXPECT_THROW((void)parse_hyperterm("sign(0) * 1 * prod binom(n/2, k)^1"), NonHypergeometricError);
}

TEST(HyperTermTest, EvaluateConventions) {
  const HyperTerm t = parse_hyperterm("sign(0) * 1 * prod binom(alpha, n - k)^1");
  EXPECT_EQ(t.evaluate({{"alpha", Rational(1, 2)}, {"n", 1}, {"k", 3}}), Rational(0));
  EXPECT_EQ(t.evaluate({{"alpha", Rational(3, 2)}, {"n", 2}, {"k", 0}}), Rational(3, 8));
  // Non-integer lower argument: Gamma factors must cancel within each class.
  const HyperTerm g = parse_hyperterm("sign(0) * 1 * prod binom(n, p)^1 binom(n + 1, p)^-1");
  EXPECT_EQ(g.evaluate({{"n", 2}, {"p", Rational(1, 3)}}), Rational(8, 9));
  const HyperTerm bad = parse_hyperterm("sign(0) * 1 * prod binom(n, p)^1");
  EXPECT_THROW((void)bad.evaluate({{"n", 2}, {"p", Rational(1, 3)}}), MathError);
  const HyperTerm pole = parse_hyperterm("sign(0) * 1 * prod binom(n, k)^-1");
  EXPECT_THROW((void)pole.evaluate({{"n", 1}, {"k", 2}}), PoleError);
}

TEST(CertificateTest, ShippedPairsHaveZeroResidual) {
  for (const char* name : {"thm1", "thm2", "thm3"}) {
    const WZPair pair = fixture(name);
    EXPECT_TRUE(ratfunc_is_zero(certificate_residual(pair))) << name << ": " << certificate_residual(pair).str();
  }
}

TEST(CertificateTest, CorruptedCertificatesFail) {
  const WZPair doubled = mutated_pair(fixture("thm1"), "scale-cert:2");
  const RatFunc residual = certificate_residual(doubled);
  ASSERT_FALSE(ratfunc_is_zero(residual));
  const Assignment at{{"n", 2}, {"k", 1}, {"j", 0}, {"alpha", Rational(1, 2)}, {"beta", Rational(1, 3)}};
  EXPECT_NE(residual.evaluate(at), Rational(0));

  const WZPair shifted = mutated_pair(fixture("thm2"), "add-cert:1/(n+1)");
  const auto report = verify_wz_pair(shifted, 3, 2, 0);
  EXPECT_FALSE(report.symbolic_ok);
  EXPECT_FALSE(report.all_pass());
}

TEST(CertificateTest, SignVariantOfThirdCompanionFails) {
  // Companion with the sign (-1)^(n+k) and C(-1-s,k): (-1)^(n+k) k(k-p) C(n,k) C(k,p) C(-1-s,k)
  // over (k-n-1)(n-p-s) C(n,p) C(s+p,n).
  const WZPair pair = fixture("thm3");
  const HyperTerm variant_part =
      parse_hyperterm("sign(n + k) * 1 * prod binom(n, k)^1 binom(k, p)^1 binom(-s - 1, k)^1 binom(n, p)^-1 "
                      "binom(s + p, n)^-1");
  const RatFunc variant_ratio = to_ratfunc("k*(k-p)/((k-n-1)*(n-p-s))");
  const auto variant_q = [&](long n, long k, const Assignment& base) {
    Assignment a = base;
    a["n"] = n;
    a["k"] = k;
    return variant_ratio.evaluate(a) * variant_part.evaluate(a);
  };
  const auto shipped_g = [&](long n, long k, const Assignment& base) {
    Assignment a = base;
    a["n"] = n;
    a["k"] = k;
    return pair.certificate.evaluate(a) * pair.term.evaluate(a);
  };
  const auto term = [&](long n, long k, const Assignment& base) {
    Assignment a = base;
    a["n"] = n;
    a["k"] = k;
    return pair.term.evaluate(a);
  };
  const Assignment at{{"s", Rational(1, 2)}, {"p", Rational(1, 3)}};
  const long n = 2, k = 1;
  const Rational lhs = term(n, k, at) - term(n + 1, k, at);
  EXPECT_NE(lhs, variant_q(n, k + 1, at) - variant_q(n, k, at));
  EXPECT_EQ(lhs, shipped_g(n, k + 1, at) - shipped_g(n, k, at));
}

TEST(VerifyTest, PairsPass) {
  for (const char* name : {"thm1", "thm2", "thm3"}) {
    const auto report = verify_wz_pair(fixture(name), 10, 20, 0);
    EXPECT_TRUE(report.symbolic_ok) << name;
    EXPECT_TRUE(report.all_pass()) << name;
    bool saw_edge = false;
    for (const auto& row : report.rows) saw_edge = saw_edge || row.id.ends_with("/edge-k(n+1)");
    EXPECT_TRUE(saw_edge) << name;
  }
}

TEST(TelescopingTest, Examples) {
  const WZPair thm1 = fixture("thm1");
  Rational sum(0);
  for (long k = 0; k <= 1; ++k)
    sum += thm1.term.evaluate({{"n", 1}, {"k", k}, {"j", 0}, {"alpha", Rational(1, 2)}, {"beta", Rational(1, 3)}});
  EXPECT_EQ(sum, Rational(1));

  const WZPair thm2 = fixture("thm2");
  const std::vector<std::optional<Assignment>> draws{Assignment{{"s", Rational(1, 2)}, {"t", Rational(1, 3)}}};
  const auto outcomes = telescoping_sum_check(thm2, 5, draws);
  ASSERT_EQ(outcomes.size(), 1u);
  EXPECT_EQ(outcomes[0].status, Status::pass);

  const WZPair thm3 = fixture("thm3");
  sum = Rational(0);
  for (long k = 0; k <= 2; ++k) sum += thm3.term.evaluate({{"n", 2}, {"k", k}, {"s", Rational(1, 2)}, {"p", 1}});
  EXPECT_EQ(sum, Rational(1));
}

TEST(TelescopingTest, SeededGrid) {
  const WZPair thm1 = fixture("thm1");
  const auto draws = draw_pair_params(thm1, 20, 0);
  for (const auto& outcome : telescoping_sum_check(thm1, 25, draws)) EXPECT_EQ(outcome.status, Status::pass);
}

TEST(PropertyTest, ShiftRatioMatchesDirectEvaluation) {
  for (const char* name : {"thm1", "thm2", "thm3"}) {
    const WZPair pair = fixture(name);
    const auto draws = draw_pair_params(pair, 50, 3);
    std::mt19937_64 rng(5);
    int checked = 0;
    for (const auto& draw : draws) {
      ASSERT_TRUE(draw.has_value());
      Assignment a = *draw;
      const long n = static_cast<long>(rng() % 8);
      a["n"] = n;
      a["k"] = static_cast<long>(rng() % static_cast<std::uint64_t>(n + 1));
      for (Var v : pair.indices) a[std::string(var_name(v))] = static_cast<long>(rng() % static_cast<std::uint64_t>(n + 1));
      for (Var v : {Var::n, Var::k}) {
        Assignment next = a;
        next[std::string(var_name(v))] += 1;
        try {
          const Rational here = pair.term.evaluate(a);
          const Rational ratio = shift_ratio(pair.term, v).evaluate(a);
          EXPECT_EQ(ratio * here, pair.term.evaluate(next)) << name;
          ++checked;
        } catch (const MathError&) {
        }
      }
    }
    EXPECT_GT(checked, 50) << name;
  }
}

TEST(PropertyTest, MutationsBreakTheSymbolicCheck) {
  for (const char* name : {"thm1", "thm2", "thm3"}) {
    const WZPair pair = fixture(name);
    // Factors free of n and k cancel from both shift ratios; flipping them is invisible.
    std::vector<std::size_t> moving;
    for (std::size_t i = 0; i < pair.term.factors().size(); ++i) {
      const auto& f = pair.term.factors()[i];
      if (f.top.coefficient(Var::n) || f.top.coefficient(Var::k) || f.bottom.coefficient(Var::n) ||
          f.bottom.coefficient(Var::k))
        moving.push_back(i);
    }
    std::mt19937_64 rng(0x5eed + moving.size());
    for (int i = 0; i < 10; ++i) {
      std::string mutation;
      if (i % 2 == 0) {
        mutation = "flip-exp:" + std::to_string(moving[rng() % moving.size()]);
      } else {
        long num = 0, den = 1;
        while (num == den) {
          num = static_cast<long>(rng() % 19) - 9;
          den = static_cast<long>(rng() % 9) + 1;
        }
        mutation = "scale-cert:" + Rational(num, den).str();
      }
      EXPECT_FALSE(ratfunc_is_zero(certificate_residual(mutated_pair(pair, mutation)))) << name << " " << mutation;
    }
  }
}

TEST(CertificateFileTest, RoundTripAndErrors) {
  for (const char* name : {"thm1", "thm2", "thm3"}) {
    const WZPair pair = fixture(name);
    const std::string text = format_certificate(pair);
    EXPECT_EQ(format_certificate(parse_certificate(text)), text);
  }
  try {
    (void)parse_certificate("name: x\nterm: sign(0) * 1 * prod binom(n, k)^2\ncertificate: 1\norientation: 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
  EXPECT_THROW((void)parse_certificate("term: sign(0) * 1\n"), ParseError);
  EXPECT_THROW((void)load_certificate(kFixtures / "missing.wz"), std::exception);
}

}  // namespace
}  // namespace wzsum
