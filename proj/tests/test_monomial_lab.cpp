#include <gtest/gtest.h>

#include <random>

#include "agrees/parse.hpp"
#include "agrees/testing/oracles.hpp"

using namespace agrees;

namespace {

Staircase S(std::vector<ExpPair> pairs) { return staircase_normalize(std::move(pairs)); }

bool closure_contains(const Staircase& big, const Staircase& small) {
  for (auto [a, b] : small.gens()) {
    if (!big.contains(a, b)) return false;
  }
  return true;
}

}  // namespace

TEST(Staircase, NormalizeExamples) {
  EXPECT_EQ(S({{3, 0}, {2, 3}, {2, 4}, {1, 5}, {0, 6}}).gens(),
            (std::vector<ExpPair>{{3, 0}, {2, 3}, {1, 5}, {0, 6}}));
  EXPECT_EQ(S({{2, 0}, {0, 5}, {1, 4}}).gens(), (std::vector<ExpPair>{{2, 0}, {1, 4}, {0, 5}}));
  EXPECT_EQ(S({{1, 1}}).gens(), (std::vector<ExpPair>{{1, 1}}));
  EXPECT_FALSE(S({{1, 1}}).is_m_primary());
  EXPECT_THROW(S({}), EmptyInput);
  EXPECT_EQ(S({{2, 0}, {0, 5}, {1, 4}}).to_string(), "(x^2, x*y^4, y^5)");
}

TEST(Staircase, ColengthExamples) {
  EXPECT_EQ(mono_colength(S({{3, 0}, {0, 6}})), 18);
  EXPECT_EQ(mono_colength(S({{3, 0}, {2, 3}, {1, 5}, {0, 6}})), 14);
  EXPECT_EQ(mono_colength(S({{2, 0}, {1, 1}, {0, 3}})), 4);
  EXPECT_THROW(mono_colength(S({{1, 1}})), NotZeroDimensional);
}

TEST(Staircase, ArithmeticMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Staircase s = oracle::random_staircase(rng, 7), t = oracle::random_staircase(rng, 7);
    EXPECT_EQ(mono_colength(s), oracle::colength(s));
    EXPECT_EQ(staircase_product(s, t), oracle::product(s, t));
    EXPECT_EQ(staircase_colon(s, t), oracle::colon(s, t));
    EXPECT_EQ(staircase_intersection(s, t), oracle::intersection(s, t));
  }
  Staircase m = S({{1, 0}, {0, 1}});
  EXPECT_EQ(staircase_power(m, 3), S({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
}

TEST(NewtonClosure, Examples) {
  EXPECT_EQ(newton_closure(S({{2, 0}, {1, 4}, {0, 5}})), S({{2, 0}, {1, 3}, {0, 5}}));
  Staircase gains = S({{2, 0}, {1, 3}, {0, 4}});
  Staircase bar = newton_closure(gains);
  EXPECT_TRUE(bar.contains(1, 2));
  EXPECT_FALSE(gains.contains(1, 2));
  Staircase tight = S({{2, 0}, {1, 1}, {0, 3}});
  EXPECT_EQ(newton_closure(tight), tight);
  EXPECT_EQ(newton_closure(S({{3, 0}, {0, 6}})), S({{3, 0}, {2, 2}, {1, 4}, {0, 6}}));
  EXPECT_THROW(newton_closure(S({{1, 1}})), NotZeroDimensional);
}

TEST(NewtonClosure, PolygonVertices) {
  NewtonPolygon p(S({{4, 0}, {3, 1}, {1, 2}, {0, 5}}));
  // (3, 1) is not a vertex: the lower hull runs (0,5)-(1,2)-(4,0)
  EXPECT_FALSE(p.contains(2, 1));
  EXPECT_TRUE(p.contains(2, 2));
  EXPECT_TRUE(p.contains(3, 1));
  EXPECT_FALSE(p.contains(1, 1));
  EXPECT_TRUE(p.contains(0, 5));
}

TEST(NewtonClosure, GapLength) {
  EXPECT_EQ(closure_gap_length(S({{2, 0}, {1, 4}, {0, 5}})), 1);
  // hull 2a + b >= 6: colength drops from 18 to 12
  EXPECT_EQ(closure_gap_length(S({{3, 0}, {0, 6}})), 6);
  EXPECT_EQ(closure_gap_length(S({{2, 0}, {1, 1}, {0, 3}})), 0);
}

TEST(NewtonClosure, IsAClosureOperator) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 150; ++i) {
    Staircase s = oracle::random_staircase(rng, 8), t = oracle::random_staircase(rng, 8);
    Staircase bar = newton_closure(s);
    EXPECT_TRUE(closure_contains(bar, s)) << s.to_string();
    EXPECT_EQ(newton_closure(bar), bar) << s.to_string();
    Staircase sum = staircase_normalize([&] {
      auto v = s.gens();
      v.insert(v.end(), t.gens().begin(), t.gens().end());
      return v;
    }());
    EXPECT_TRUE(closure_contains(newton_closure(sum), bar)) << s.to_string() << " " << t.to_string();
  }
}

TEST(NewtonClosure, AgreesWithPowerMembershipOracle) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    Staircase s = oracle::random_staircase(rng, 6);
    Staircase bar = newton_closure(s);
    for (int a = 0; a <= s.x_power(); ++a) {
      for (int b = 0; b <= s.y_power(); ++b) {
        EXPECT_EQ(bar.contains(a, b), oracle::integral_by_powers(s, a, b)) << s.to_string() << " " << a << "," << b;
      }
    }
  }
}

TEST(Contracted, Examples) {
  EXPECT_TRUE(is_contracted(S({{3, 0}, {2, 3}, {1, 5}, {0, 6}})));
  EXPECT_FALSE(is_contracted(S({{3, 0}, {2, 3}, {0, 6}})));
  EXPECT_FALSE(is_contracted(S({{2, 0}, {0, 2}})));
  EXPECT_THROW(is_contracted(S({{2, 1}})), NotZeroDimensional);
  for (int k = 1; k <= 8; ++k) EXPECT_TRUE(is_contracted(staircase_power(S({{1, 0}, {0, 1}}), k))) << k;
}

TEST(Contracted, PolynomialInputs) {
  auto ideal = IdealHandle<Rational>(Ring::base(), parse_ideal_spec<Rational>("x^2 - y^3, x y^2, y^4"));
  EXPECT_EQ(is_contracted(ideal), min_gens(ideal) == ideal_order(ideal) + 1);
  EXPECT_TRUE(is_contracted(maximal_ideal<Rational>()));
  EXPECT_FALSE(is_contracted(IdealHandle<Rational>(Ring::base(), parse_ideal_spec<Rational>("x^2 + y^3, x y"))));
}

TEST(Contracted, ProductsStayContracted) {
  std::mt19937_64 rng(34);
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 80; ++i) {
    Staircase s = oracle::random_staircase(rng, 6), t = oracle::random_staircase(rng, 6);
    if (!is_contracted(s) || !is_contracted(t)) continue;
    ++seen;
    EXPECT_TRUE(is_contracted(staircase_product(s, t))) << s.to_string() << " * " << t.to_string();
  }
  EXPECT_GE(seen, 20);
}

TEST(Render, RowsAreYExponentsDescending) {
  EXPECT_EQ(render_staircase(S({{2, 0}, {1, 1}, {0, 3}})), "###\n.##\n.##\n..#\n");
  EXPECT_EQ(render_staircase(S({{1, 0}, {0, 1}})), "##\n.#\n");
}

TEST(Bridge, StaircaseOfIdeal) {
  auto ideal = monomial_ideal<Rational>({{3, 0}, {2, 3}, {2, 4}, {0, 6}});
  auto s = staircase_of(ideal);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, S({{3, 0}, {2, 3}, {0, 6}}));
  EXPECT_FALSE(staircase_of(IdealHandle<Rational>(Ring::base(), parse_ideal_spec<Rational>("x - y, y^2"))).has_value());
  EXPECT_TRUE(ideal_equal(to_ideal<Rational>(*s), ideal));
}
