#include <gtest/gtest.h>

#include "wzsum/catalog.hpp"
#include "wzsum/crosscheck.hpp"
#include "wzsum/errors.hpp"
#include "wzsum/harmonic.hpp"
#include "wzsum/jet_oracle.hpp"
#include "wzsum/params.hpp"
#include "wzsum/suite.hpp"

namespace wzsum {
namespace {

Point<Rational> at(long n, std::initializer_list<std::pair<const std::string, Rational>> values) {
  return {n, {values}};
}

TEST(CatalogTest, IdsAndSides) {
  const auto& entries = catalog();
  ASSERT_EQ(entries.size(), 28u);
  for (std::size_t i = 1; i < entries.size(); ++i) EXPECT_LT(entries[i - 1].id, entries[i].id);
  EXPECT_THROW((void)find_entry("ID99"), std::out_of_range);
}

TEST(CatalogTest, EvaluateSide) {
  const auto& id03 = find_entry("ID03");
  const auto p = at(1, {{"alpha", Rational(1, 2)}, {"beta", Rational(1, 3)}, {"x", 2}});
  EXPECT_EQ(id03.lhs(p), Rational(19, 6));
  EXPECT_EQ(id03.rhs(p), Rational(19, 6));
  EXPECT_EQ(find_entry("ID06").rhs(at(2, {{"s", Rational(1, 2)}, {"t", Rational(1, 3)}})), Rational(187, 112));
  EXPECT_EQ(find_entry("ID07").lhs(at(2, {{"s", Rational(1, 2)}, {"p", 1}})), Rational(3, 4));
}

TEST(CatalogTest, CheckPointExamples) {
  const auto row01 = check_point(find_entry("ID01"), at(1, {{"x", 1}}));
  EXPECT_EQ(row01.status, Status::pass);
  EXPECT_EQ(row01.lhs, "3");
  const auto row16 = check_point(find_entry("ID16"), at(2, {}));
  EXPECT_EQ(row16.lhs, "3/2");
  EXPECT_EQ(row16.rhs, "3/2");
  const auto row15 = check_point(find_entry("ID15"), at(2, {{"s", Rational(1, 2)}}));
  EXPECT_EQ(row15.status, Status::pass);
  EXPECT_EQ(row15.lhs, "-3/16");
}

TEST(CatalogTest, SpotValues) {
  struct Spot {
    const char* id;
    long n;
    const char* value;
  };
  for (const Spot& s : {Spot{"ID18", 2, "9/4"}, Spot{"ID25", 2, "4"}, Spot{"ID24", 2, "11/2"}, Spot{"ID22", 2, "2"},
                        Spot{"ID26", 1, "2"}, Spot{"ID26", 2, "23/2"}, Spot{"ID20", 1, "6"}, Spot{"ID17", 1, "-1/2"},
                        Spot{"ID17", 2, "-7/16"}, Spot{"ID17", 3, "-37/96"}}) {
    const auto row = check_point(find_entry(s.id), at(s.n, {}));
    EXPECT_EQ(row.status, Status::pass) << s.id;
    EXPECT_EQ(row.lhs, s.value) << s.id << " n=" << s.n;
  }
  EXPECT_EQ(check_point(find_entry("ID21"), at(2, {{"s", Rational(1, 2)}})).lhs, "48");
  EXPECT_EQ(check_point(find_entry("ID09"), at(2, {{"beta", Rational(1, 3)}})).lhs, "1");
  const auto al = check_point(find_entry("ID05"), at(1, {{"lambda", 1}}));
  EXPECT_EQ(al.lhs, "4");
  EXPECT_EQ(al.rhs, "4");
  EXPECT_EQ(check_point(find_entry("ID13"), at(2, {{"t", 2}})).lhs, "59/32");
}

TEST(CatalogTest, ExclusionsSkip) {
  const auto row = check_point(find_entry("ID15"), at(3, {{"s", 1}}));
  EXPECT_EQ(row.status, Status::skipped);
  EXPECT_FALSE(row.reason.empty());
  EXPECT_EQ(check_point(find_entry("ID13"), at(3, {{"t", 0}})).status, Status::skipped);
  EXPECT_EQ(check_point(find_entry("ID03"), at(3, {{"alpha", -2}, {"beta", 1}, {"x", 1}})).status, Status::skipped);
}

TEST(CatalogTest, EveryEntrySmallGrid) {
  for (const auto& e : catalog()) {
    for (const auto& row : check_identity(e, {8, 4, 1})) EXPECT_EQ(row.status, Status::pass) << e.id << " " << row.reason;
  }
}

TEST(CatalogTest, MutationsAreLocal) {
  const auto flipped = mutated_entry(find_entry("ID24"), "flip-h2n");
  EXPECT_EQ(check_point(flipped, at(0, {})).status, Status::pass);
  for (long n = 1; n <= 5; ++n) EXPECT_EQ(check_point(flipped, at(n, {})).status, Status::fail);
  EXPECT_THROW((void)mutated_entry(find_entry("ID01"), "flip-h2n"), std::invalid_argument);
  const auto scaled = mutated_entry(find_entry("ID01"), "scale-rhs:3/2");
  EXPECT_EQ(check_point(scaled, at(1, {{"x", 1}})).status, Status::fail);
}

TEST(JetOracleTest, Examples) {
  const auto v = derived_identity_via_jets("ID07", {{"p"}}, at(2, {{"s", Rational(1, 2)}, {"p", 0}}));
  EXPECT_EQ(v.lhs, Rational(-3, 16));
  EXPECT_EQ(v.rhs, Rational(-3, 16));
  const auto& d25 = find_derivation("ID25");
  const auto mixed = derived_identity_via_jets("ID06", d25.spec, at(2, {{"s", 2}, {"t", 0}}));
  EXPECT_EQ(mixed.lhs, mixed.rhs);
  EXPECT_EQ(d25.transform(mixed.lhs, at(2, {})), Rational(4));
}

TEST(JetOracleTest, OrderZeroMatchesPlainEvaluation) {
  for (const auto& e : catalog()) {
    const auto rows = check_identity(e, {4, 2, 9});
    for (const auto& row : rows) {
      Point<Rational> p{*row.n, {}};
      for (const auto& [name, value] : row.params) p.values[name] = Rational::parse(value);
      const auto v = derived_identity_via_jets(e.id, {}, p);
      EXPECT_EQ(v.lhs.str(), row.lhs) << e.id;
      EXPECT_EQ(v.rhs.str(), row.rhs) << e.id;
    }
  }
}

TEST(JetOracleTest, DerivationsAgree) {
  for (const auto& d : jet_derivations()) {
    const auto& entry = find_entry(d.derived_id);
    for (long n = 0; n <= 12; ++n) {
      Point<Rational> p{n, {}};
      if (!entry.rational_params().empty()) p.values["s"] = Rational(6 * n + 1, 4);
      const auto row = jet_check(d, p);
      EXPECT_EQ(row.status, Status::pass) << d.derived_id << " n=" << n << " " << row.reason;
    }
  }
}

TEST(JetOracleTest, GeneralFormSpecializesToHarmonicSquare) {
  // At s = n the corrected general-s identity reduces to the H_n^2 one.
  for (long n = 1; n <= 15; ++n) {
    const auto& general = find_entry("ID18G");
    const Rational lhs = general.lhs(at(n, {{"s", n}}));
    const Rational hn = harmonic(n);
    EXPECT_EQ(lhs, Rational(4) * hn * hn) << n;
    EXPECT_EQ(general.rhs(at(n, {{"s", n}})), Rational(4) * hn * hn) << n;
  }
}

TEST(CrossCheckTest, TaylorRoute) {
  const auto route = taylor_route(1, Rational(1, 2), Rational(1, 3));
  EXPECT_TRUE(route.ok);
  EXPECT_EQ(route.shifted[0], Rational(-5, 6));
  EXPECT_TRUE(taylor_route_check(0, Rational(7, 3), Rational(-1, 2)));
  EXPECT_EQ(taylor_route(0, Rational(7, 3), Rational(-1, 2)).shifted[0], Rational(1));
  EXPECT_TRUE(taylor_route_check(2, Rational(2), Rational(2)));
  EXPECT_FALSE(taylor_route(3, Rational(1, 2), Rational(1, 3)).shifted.empty());
}

TEST(CrossCheckTest, Reductions) {
  RationalSampler sampler(77);
  for (int i = 0; i < 10; ++i) {
    const Rational a = sampler.next(), b = sampler.next(), x = sampler.next();
    Rational y = sampler.next();
    if (y.is_zero()) y = Rational(1);
    for (long n = 0; n <= 8; ++n) EXPECT_TRUE(two_variable_reduction_check(n, a, b, x, y));
  }
  for (long n = 0; n <= 10; ++n) {
    EXPECT_TRUE(alzer_kouba_substitution_check(n, Rational(1)));
    EXPECT_TRUE(alzer_kouba_substitution_check(n, Rational(-7, 3)));
  }
}

TEST(CrossCheckTest, InversionInvolution) {
  EXPECT_TRUE(inversion_involution_check(20, Rational(1, 2), Rational(1, 3)));
  EXPECT_TRUE(inversion_involution_check(20, Rational(-5, 7), Rational(2)));
  const std::vector<Rational> a{1, 2, Rational(1, 3), -4};
  EXPECT_EQ(binomial_transform(binomial_transform(a, true), false), a);
}

TEST(SuiteTest, FilterAndZeroBound) {
  SuiteConfig config;
  config.filter = {"ID01"};
  config.n_max = 0;
  const auto report = run_suite(config);
  EXPECT_EQ(report.rows.size(), static_cast<std::size_t>(config.samples));
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.status, Status::pass);
    EXPECT_EQ(row.lhs, "1");
    EXPECT_EQ(row.rhs, "1");
  }
  config.samples = 1;
  const auto single = run_suite(config);
  ASSERT_EQ(single.rows.size(), 1u);
  EXPECT_EQ(single.rows[0].status, Status::pass);
  EXPECT_EQ(single.rows[0].lhs, "1");
}

TEST(SuiteTest, MutatedEntryFailsOnlyItsRows) {
  SuiteConfig config;
  config.n_max = 6;
  config.samples = 2;
  config.mutations = {"ID24:flip-h2n"};
  const auto report = run_suite(config);
  EXPECT_GT(report.summary.fail, 0);
  for (const auto& row : report.rows)
    if (row.status == Status::fail) EXPECT_EQ(row.id, "ID24");
}

TEST(SuiteTest, DeterministicAcrossThreadCounts) {
  SuiteConfig config;
  config.n_max = 5;
  config.samples = 2;
  config.seed = 3;
  config.fixtures = WZSUM_FIXTURES_DIR;
  config.threads = 1;
  const auto one = run_suite(config);
  config.threads = 4;
  const auto four = run_suite(config);
  ASSERT_EQ(one.rows.size(), four.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].id, four.rows[i].id);
    EXPECT_EQ(one.rows[i].lhs, four.rows[i].lhs);
    EXPECT_EQ(one.rows[i].params, four.rows[i].params);
  }
  EXPECT_EQ(one.summary.fail, 0);
}

}  // namespace
}  // namespace wzsum
