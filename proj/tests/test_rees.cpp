#include <gtest/gtest.h>

#include "agrees/families.hpp"
#include "agrees/parse.hpp"
#include "agrees/rees.hpp"

using namespace agrees;

namespace {

using Q = Rational;

IdealHandle<Q> I(const std::string& s) { return IdealHandle<Q>(Ring::base(), parse_ideal_spec<Q>(s)); }

std::vector<int> sorted_t_degrees(const ReesPresentation<Q>& p) {
  auto d = p.t_degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Rees, ParameterIdealHasOneRelation) {
  auto p = rees_defining_ideal(I("x^3, y^6"));
  ASSERT_EQ(p.defining_gens.size(), 1U);
  EXPECT_EQ(p.defining_gens[0].to_string(), "y^6*T1 - x^3*T2");
  EXPECT_EQ(p.bidegrees, (std::vector<Bidegree>{{1, 3}}));
  EXPECT_TRUE(substitution_check(p));
}

TEST(Rees, MaximalIdeal) {
  auto p = rees_defining_ideal(maximal_ideal<Q>());
  ASSERT_EQ(p.defining_gens.size(), 1U);
  EXPECT_EQ(p.defining_gens[0].to_string(), "y*T1 - x*T2");
  EXPECT_EQ(presentation_bidegrees(maximal_ideal<Q>()), (std::vector<Bidegree>{{1, 1}}));
}

TEST(Rees, ThreeGeneratedShape) {
  auto ideal = I("x^3, x^2 y^2, y^4");
  auto p = rees_defining_ideal(ideal);
  EXPECT_EQ(sorted_t_degrees(p), (std::vector<int>{1, 1, 2}));
  EXPECT_TRUE(substitution_check(p));
  // the expected relations lie in the computed kernel
  IdealHandle<Q> kernel(p.ring, p.defining_gens);
  for (const char* rel : {"y^2*T1 - x*T2", "y^2*T2 - x^2*T3", "x*T1*T3 - T2^2"}) {
    EXPECT_TRUE(ideal_contains(kernel, parse_polynomial<Q>(rel, p.ring))) << rel;
  }
}

TEST(Rees, ThreeGenFamilyAlwaysHasDegrees112) {
  for (int n = 3; n <= 7; ++n) {
    for (int a = (n + 1) / 2; a < n; ++a) {
      auto p = rees_defining_ideal(make_family("three-gen", {{"n", n}, {"alpha", a}}));
      EXPECT_EQ(sorted_t_degrees(p), (std::vector<int>{1, 1, 2})) << n << "," << a;
      EXPECT_TRUE(substitution_check(p));
    }
  }
}

TEST(Rees, FourGeneratedCaseIsRecorded) {
  auto p = rees_defining_ideal(make_family("contracted-o3", {{"n", 6}, {"alpha", 3}, {"beta", 5}}));
  EXPECT_TRUE(substitution_check(p));
  auto d = sorted_t_degrees(p);
  // three linear syzygies of a 4-generated ideal plus quadrics
  EXPECT_EQ(std::count(d.begin(), d.end(), 1), 3);
  EXPECT_EQ(d.size(), 6U);
}

TEST(Rees, PrimeField) {
  const FieldConfig cfg = FieldConfig::prime_field(2147483647);
  auto ideal = make_family<ModP>("three-gen", {{"n", 5}, {"alpha", 3}}, cfg);
  auto p = rees_defining_ideal(ideal);
  auto d = p.t_degrees();
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<int>{1, 1, 2}));
  EXPECT_TRUE(substitution_check(p, cfg));
}

TEST(Rees, Errors) {
  EXPECT_THROW(rees_defining_ideal(I("x^2, x y")), NotZeroDimensional);
  EXPECT_THROW(rees_defining_ideal(I("x^5, x^3 y^2, x y^4, y^7"), GbBudget{4, 0}), EliminationBudgetExceeded);
}
