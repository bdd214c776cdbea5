#include "test_support.hpp"

#include <gtest/gtest.h>

namespace sigcount {
namespace {

using testing::Gen;
using testing::polys;

const VarContext X1({"X"});
const VarContext XY({"X", "Y"});

TEST(Sturm, Sequences) {
  auto a = sturm_sequence(UPoly({-1, 0, 1}));
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[1], UPoly({0, 2}));
  EXPECT_TRUE(a[2].is_constant());
  EXPECT_GT(a[2].lead(), Rational(0));

  auto b = sturm_sequence(UPoly({1, 0, 1}));
  EXPECT_LT(b.back().lead(), Rational(0));
  EXPECT_EQ(sign_variations(b, Rational(-100)), sign_variations(b, Rational(100)));

  auto c = sturm_sequence(upoly_from_roots({1, 1}));
  EXPECT_EQ(c.front(), UPoly::linear(Rational(1)));

  EXPECT_EQ(sturm_sequence(UPoly::constant(Rational(3))).size(), 1u);
  EXPECT_THROW(sturm_sequence(UPoly()), std::invalid_argument);
}

TEST(Sturm, Counts) {
  EXPECT_EQ(sturm_count(UPoly({-1, 0, 1}), Rational(-2), Rational(2)), 2u);
  EXPECT_EQ(sturm_count(UPoly({1, 0, 1}), Rational(-10), Rational(10)), 0u);
  EXPECT_EQ(sturm_count(UPoly({0, -1, 0, 1}), Rational(1, 2), Rational(2)), 1u);
  EXPECT_THROW(sturm_count(UPoly({0, -1, 0, 1}), Rational(0), Rational(2)), EndpointIsRoot);
  EXPECT_THROW(sturm_count(UPoly({-1, 0, 1}), Rational(2), Rational(-2)), std::invalid_argument);
}

TEST(Sturm, CountAllReal) {
  EXPECT_EQ(count_all_real(UPoly({-1, 0, 1})), 2u);
  EXPECT_EQ(count_all_real(upoly_from_roots({1, 1}) * UPoly({1, 0, 1})), 1u);
  EXPECT_EQ(count_all_real(UPoly({0, -1, 0, 0, 0, 1})), 3u);
  EXPECT_EQ(count_all_real(UPoly::constant(Rational(2))), 0u);
}

TEST(Isolation, Examples) {
  auto a = isolate_real_roots(UPoly({-2, 0, 1})).intervals;
  ASSERT_EQ(a.size(), 2u);
  EXPECT_GE(a[0].first, Rational(-2));
  EXPECT_LE(a[0].second, Rational(-1));
  EXPECT_GE(a[1].first, Rational(1));
  EXPECT_LE(a[1].second, Rational(2));
  EXPECT_TRUE(isolate_real_roots(UPoly({1, 0, 1})).intervals.empty());
  auto c = isolate_real_roots(UPoly::x()).intervals;
  ASSERT_EQ(c.size(), 1u);
  EXPECT_LT(c[0].first, Rational(0));
  EXPECT_GE(c[0].second, Rational(0));
}

TEST(OracleCount, Examples) {
  OracleCounts a = oracle_count_system(polys(XY, {"X^2 + Y^2 - 1", "Y - X"}), testing::poly(XY, "X"));
  EXPECT_EQ(a.positive, 1u);
  EXPECT_EQ(a.negative, 1u);
  EXPECT_EQ(a.zero, 0u);
  EXPECT_EQ(a.total_real, 2u);

  OracleCounts b = oracle_count_system(polys(X1, {"X^2 - 1"}), testing::poly(X1, "1"));
  EXPECT_EQ(b.positive, 2u);
  EXPECT_EQ(b.total_real, 2u);

  OracleCounts c = oracle_count_system(polys(X1, {"X^2 - 1"}), testing::poly(X1, "X - 1"));
  EXPECT_EQ(c.positive, 0u);
  EXPECT_EQ(c.negative, 1u);
  EXPECT_EQ(c.zero, 1u);
  EXPECT_EQ(c.total_real, 2u);
}

TEST(OracleCount, GeneralPositionAndErrors) {
  OracleCounts a = oracle_count_system(polys(XY, {"X^2 - 1", "Y^2 - 1"}), testing::poly(XY, "X + Y"));
  EXPECT_EQ(a.positive, 1u);
  EXPECT_EQ(a.negative, 1u);
  EXPECT_EQ(a.zero, 2u);
  EXPECT_EQ(a.general_position_t, Rational(2));
  EXPECT_THROW(oracle_count_system(polys(X1, {"X^2"}), testing::poly(X1, "1")), OracleInapplicable);
  EXPECT_THROW(oracle_count_system(polys(XY, {"X^2 - 1", "Y^2 - 1"}), testing::poly(XY, "X"), 1), OracleInapplicable);
  OracleCounts unit = oracle_count_system(polys(X1, {"X", "X - 1"}), testing::poly(X1, "1"));
  EXPECT_EQ(unit.total_real, 0u);
}

TEST(OracleCount, SignOfCloseRoots) {
  // Roots 1/1000 apart; H vanishes between them.
  auto sys = std::vector<Polynomial>{from_upoly(X1, 0, upoly_from_roots({1, Rational(1001, 1000)}))};
  OracleCounts oc = oracle_count_system(sys, testing::poly(X1, "2000*X - 2001"));
  EXPECT_EQ(oc.positive, 1u);
  EXPECT_EQ(oc.negative, 1u);
}

TEST(OracleProperty, SturmMatchesSplitRootCounts) {
  Gen gen(71);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> roots;
    for (long k = gen.integer(1, 8); k > 0; --k) roots.push_back(gen.rational(6, 3));
    UPoly g = upoly_from_roots(roots);
    std::set<Rational> distinct(roots.begin(), roots.end());
    EXPECT_EQ(count_all_real(g), distinct.size());
    std::size_t pos = 0;
    for (const auto& r : distinct) pos += r > Rational(0);
    if (!g.coeff(0).is_zero()) { EXPECT_EQ(sturm_count(g, Rational(0), cauchy_bound(g)), pos); }
  }
}

TEST(OracleProperty, IsolationIntervalsAreDisjointAndComplete) {
  Gen gen(72);
  for (int i = 0; i < 100; ++i) {
    UPoly g = gen.upoly(static_cast<int>(gen.integer(1, 10)), 20);
    if (gen.coin(0.3)) g = g * g;
    auto iso = isolate_real_roots(g).intervals;
    EXPECT_EQ(iso.size(), count_all_real(g));
    for (std::size_t k = 0; k < iso.size(); ++k) {
      EXPECT_LT(iso[k].first, iso[k].second);
      EXPECT_EQ(sturm_count(g, iso[k].first, iso[k].second), 1u);
      if (k + 1 < iso.size()) { EXPECT_LE(iso[k].second, iso[k + 1].first); }
    }
  }
}

TEST(OracleProperty, SignsMatchKnownRoots) {
  Gen gen(73);
  for (int i = 0; i < 60; ++i) {
    auto roots = gen.distinct_rationals(static_cast<std::size_t>(gen.integer(1, 6)), 6, 4);
    UPoly g = upoly_from_roots(roots) * UPoly({Rational(gen.integer(1, 5)), 0, 1});
    UPoly h = gen.upoly(static_cast<int>(gen.integer(0, 4)), 5);
    if (gen.coin(0.3)) h = h * UPoly::linear(roots.front());
    std::size_t pos = 0, neg = 0, zero = 0;
    for (const auto& r : roots) {
      int s = h.sign_at(r);
      pos += s > 0;
      neg += s < 0;
      zero += s == 0;
    }
    OracleCounts oc = oracle_count_system({from_upoly(X1, 0, g)}, from_upoly(X1, 0, h));
    EXPECT_EQ(oc.positive, pos);
    EXPECT_EQ(oc.negative, neg);
    EXPECT_EQ(oc.zero, zero);
  }
}

}  // namespace
}  // namespace sigcount
