#include <gtest/gtest.h>

#include <random>

#include "agrees/families.hpp"
#include "agrees/parse.hpp"
#include "agrees/testing/oracles.hpp"

using namespace agrees;

namespace {

using Q = Rational;

IdealHandle<Q> I(const std::string& s) { return IdealHandle<Q>(Ring::base(), parse_ideal_spec<Q>(s)); }
Polynomial<Q> P(const std::string& s) { return parse_polynomial<Q>(s); }

IdealHandle<Q> o3(int n, int a, int b) { return make_family("contracted-o3", {{"n", n}, {"alpha", a}, {"beta", b}}); }

std::vector<std::string> strings(const IdealHandle<Q>& a) {
  std::vector<std::string> out;
  for (const auto& g : a.generators()) out.push_back(g.to_string());
  return out;
}

}  // namespace

TEST(FindReduction, PurePowers) {
  auto red = find_reduction(I("x^3, x^2 y^3, x y^5, y^6"), 1);
  EXPECT_EQ(red.strategy, "pure-powers");
  EXPECT_EQ(red.reduction_number, 1);
  EXPECT_TRUE(red.stable);
  EXPECT_TRUE(ideal_equal(red.q, I("x^3, y^6")));
}

TEST(FindReduction, ParameterIdealIsItsOwnReduction) {
  auto red = find_reduction(I("x^3, y^6"), 1);
  EXPECT_EQ(red.reduction_number, 0);
  EXPECT_TRUE(ideal_equal(red.q, I("x^3, y^6")));
}

TEST(FindReduction, RandomCombination) {
  IdealHandle<Q> ideal = I("x^3, x y, y^3");
  auto red = find_reduction(ideal, 7);
  EXPECT_EQ(red.strategy, "random-combination");
  ASSERT_LE(red.reduction_number, 4);
  EXPECT_TRUE(ideal_subset(red.q, ideal));
  IdealHandle<Q> power = ideal_power(ideal, red.reduction_number);
  EXPECT_TRUE(locally_equal(ideal_product(red.q, power), ideal_product(ideal, power)));
  EXPECT_THROW(find_reduction(I("x^2, x y"), 1), NotZeroDimensional);
}

TEST(Stability, Examples) {
  EXPECT_TRUE(is_stable(o3(6, 3, 5), I("x^3, y^6")));
  EXPECT_FALSE(is_stable(o3(6, 2, 3), I("x^3, y^6")));
  // (x^3, y^6) is not even a reduction of (6,2,3); a generic minimal reduction is stable
  EXPECT_TRUE(find_reduction(o3(6, 2, 3), 1).stable);
  EXPECT_FALSE(is_stable(o3(9, 3, 7), I("x^3, y^9")));
  EXPECT_FALSE(find_reduction(o3(9, 3, 7), 1).stable);
  EXPECT_TRUE(is_stable(I("x^3, y^6"), I("x^3, y^6")));
  EXPECT_THROW(is_stable(I("x^3, y^6"), I("x^2, y^6")), NotContained);
}

TEST(Stability, SmallOrderIsAlwaysStable) {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int i = 0; i < 400 && seen < 40; ++i) {
    Staircase s = oracle::random_staircase(rng, 7);
    if (s.order() > 2) continue;
    const long a = s.x_power(), b = s.y_power();
    bool pure = std::all_of(s.gens().begin(), s.gens().end(),
                            [&](const ExpPair& g) { return g.first * b + g.second * a >= a * b; });
    if (!pure) continue;
    ++seen;
    IdealHandle<Q> ideal = to_ideal<Q>(s);
    EXPECT_TRUE(is_stable(ideal, monomial_ideal<Q>({{s.x_power(), 0}, {0, s.y_power()}}))) << s.to_string();
  }
  EXPECT_GE(seen, 10);
}

TEST(CanonicalColon, Examples) {
  auto ideal = o3(6, 3, 5);
  auto j = canonical_colon(ideal, find_reduction(ideal, 1));
  EXPECT_EQ(strings(j), (std::vector<std::string>{"x^2", "x*y", "y^3"}));

  auto po = make_family("power-order", {{"m", 3}, {"n", 4}});
  auto j2 = canonical_colon(po, find_reduction(po, 1));
  EXPECT_TRUE(ideal_equal(j2, ideal_power(maximal_ideal<Q>(), 2)));

  auto q = I("x^3, y^6");
  EXPECT_TRUE(ideal_equal(canonical_colon(q, find_reduction(q, 1)), unit_ideal<Q>()));
}

TEST(CanonicalColon, OrderDropsByOneOnContractedStableIdeals) {
  for (int n = 3; n <= 9; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!oracle::o3_stable(n, a, b)) continue;
        auto ideal = o3(n, a, b);
        auto red = find_reduction(ideal, 1);
        ASSERT_TRUE(red.stable);
        EXPECT_EQ(ideal_order(ideal), ideal_order(canonical_colon(ideal, red)) + 1);
      }
    }
  }
}

TEST(Witness, VerifyRejectsBogusTriples) {
  auto ideal = I("x^2, x y^4, y^5");
  auto j = canonical_colon(ideal, find_reduction(ideal, 1));
  EXPECT_TRUE(AGWitness<Q>::verify(ideal, j, P("x"), P("x^2"), P("y")).has_value());
  EXPECT_FALSE(AGWitness<Q>::verify(ideal, j, P("y"), P("x^2"), P("y")).has_value());
  EXPECT_FALSE(AGWitness<Q>::verify(ideal, j, P("1"), P("x^2"), P("y")).has_value());
  EXPECT_FALSE(AGWitness<Q>::verify(ideal, j, P("x"), P("x"), P("y")).has_value());
}

TEST(CertificateSearch, PowerOrderWitness) {
  auto ideal = I("x^2, x y^4, y^5");
  auto red = find_reduction(ideal, 1);
  auto j = canonical_colon(ideal, red);
  auto w = certificate_search(ideal, red, j, 64, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->f().to_string(), "x");
  EXPECT_EQ(w->g().to_string(), "x^2");
  EXPECT_EQ(w->h().to_string(), "y");
}

TEST(CertificateSearch, ThreeGenWitness) {
  auto ideal = make_family("three-gen", {{"n", 4}, {"alpha", 2}});
  auto red = find_reduction(ideal, 1);
  auto j = canonical_colon(ideal, red);
  auto w = certificate_search(ideal, red, j, 64, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->f().to_string(), "y");
  EXPECT_EQ(w->g().to_string(), "y^4");
  EXPECT_EQ(w->h().to_string(), "x");
}

TEST(CertificateSearch, BoundaryWitnessIsInThePool) {
  auto ideal = o3(5, 3, 4);
  auto red = find_reduction(ideal, 1);
  auto j = canonical_colon(ideal, red);
  EXPECT_TRUE(AGWitness<Q>::verify(ideal, j, P("y"), P("x^3"), P("x^2 - y^2")).has_value());
  auto pool = h_candidates(j, 64, 1);
  EXPECT_NE(std::find(pool.begin(), pool.end(), P("x^2 - y^2")), pool.end());
  auto w = certificate_search(ideal, red, j, 64, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(AGWitness<Q>::verify(ideal, j, w->f(), w->g(), w->h()).has_value());
}

TEST(CertificateSearch, NeverSucceedsOnRefutedIdeals) {
  auto ideal = o3(6, 3, 5);
  auto red = find_reduction(ideal, 1);
  EXPECT_FALSE(certificate_search(ideal, red, canonical_colon(ideal, red), 64, 3).has_value());
  auto bad = o3(9, 3, 7);
  auto bad_red = find_reduction(bad, 1);
  ASSERT_FALSE(bad_red.stable);
  EXPECT_THROW(certificate_search(bad, bad_red, canonical_colon(bad, bad_red), 8, 1), NotStable);
}

TEST(NecessaryBound, Examples) {
  auto ideal = o3(6, 3, 5);
  auto red = find_reduction(ideal, 1);
  auto ref = necessary_bound(ideal, red, canonical_colon(ideal, red), 1);
  EXPECT_EQ(ref.mu_ij, 6);
  EXPECT_EQ(ref.mu_mj, 4);
  EXPECT_EQ(ref.rank_i, 3);
  EXPECT_EQ(ref.rank_m, 2);
  EXPECT_EQ(ref.min_sum, 5);
  EXPECT_EQ(ref.threshold, 4);
  EXPECT_EQ(ref.trials, 16);

  auto tg = make_family("three-gen", {{"n", 5}, {"alpha", 3}});
  auto tg_red = find_reduction(tg, 1);
  auto tg_ref = necessary_bound(tg, tg_red, canonical_colon(tg, tg_red), 1);
  EXPECT_EQ(tg_ref.mu_ij, 4);
  EXPECT_EQ(tg_ref.mu_mj, 3);
  EXPECT_EQ(tg_ref.min_sum, 3);
  EXPECT_EQ(tg_ref.threshold, 2);

  auto ok = o3(5, 3, 4);
  auto ok_red = find_reduction(ok, 1);
  EXPECT_LE(necessary_bound(ok, ok_red, canonical_colon(ok, ok_red), 1).min_sum, 4);
}

TEST(NecessaryBound, MatchesColengthOracle) {
  for (int n = 4; n <= 7; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!oracle::o3_stable(n, a, b)) continue;
        auto ideal = o3(n, a, b);
        auto red = find_reduction(ideal, 1);
        auto j = canonical_colon(ideal, red);
        auto ref = necessary_bound(ideal, red, j, 5);
        EXPECT_EQ(ref.min_sum, oracle::min_sum_by_colength(ideal, j)) << n << "," << a << "," << b;
        EXPECT_GE(ref.min_sum, 2);
      }
    }
  }
}

TEST(NecessaryBound, RequiresStability) {
  auto bad = o3(9, 3, 7);
  auto red = find_reduction(bad, 1);
  EXPECT_THROW(necessary_bound(bad, red, canonical_colon(bad, red), 1), NotStable);
}

TEST(Classify, Examples) {
  auto r = classify(o3(6, 3, 5));
  EXPECT_EQ(r.verdict, Verdict::NotAg);
  ASSERT_TRUE(r.refutation.has_value());
  EXPECT_EQ(r.refutation->min_sum, 5);
  EXPECT_TRUE(r.contracted);
  EXPECT_EQ(r.colength, 14);

  auto ag = classify(I("x^2, x y^4, y^5"));
  EXPECT_EQ(ag.verdict, Verdict::AgCertified);
  ASSERT_TRUE(ag.witness.has_value());
  EXPECT_EQ(ag.witness->h, "y");
  EXPECT_EQ(ag.integrally_closed, false);
  EXPECT_EQ(ag.closure_gap, 1);

  auto gor = classify(I("x^3, y^6"));
  EXPECT_EQ(gor.verdict, Verdict::Gorenstein);
  ASSERT_TRUE(gor.colon.has_value());
  EXPECT_EQ(gor.colon->mu, 1);

  auto unstable = classify(o3(9, 3, 7));
  EXPECT_EQ(unstable.verdict, Verdict::Unknown);
  EXPECT_FALSE(unstable.notes.empty());

  EXPECT_THROW(classify(I("x^2, x y")), NotZeroDimensional);
  EXPECT_EQ(to_string(Verdict::AgCertified), "AG_CERTIFIED");
  EXPECT_EQ(to_string(Verdict::NotAg), "NOT_AG");
}

TEST(Classify, PrimeFieldConfirmsWithASecondPrime) {
  ClassifyConfig cfg;
  cfg.field = FieldConfig::prime_field(2147483647);
  auto r = classify(o3(6, 3, 5), cfg);
  EXPECT_EQ(r.verdict, Verdict::NotAg);
  ASSERT_TRUE(r.refutation.has_value());
  EXPECT_EQ(r.refutation->primes, (std::vector<std::uint64_t>{2147483647, 2147483629}));
  EXPECT_LT(r.refutation->failure_bound, 1e-6);
  EXPECT_EQ(r.field, "fp:2147483647");
}

TEST(Classify, DeterministicForFixedSeed) {
  ClassifyConfig cfg;
  cfg.seed = 99;
  for (const char* spec : {"x^3, x y, y^3", "x^3, x^2 y^3, x y^5, y^6", "x^2 - y^3, x y^2, y^4"}) {
    auto a = classify(I(spec), cfg), b = classify(I(spec), cfg);
    EXPECT_EQ(a.verdict, b.verdict) << spec;
    ASSERT_EQ(a.reduction.has_value(), b.reduction.has_value());
    if (a.reduction) EXPECT_EQ(a.reduction->q, b.reduction->q) << spec;
    if (a.witness) EXPECT_EQ(a.witness->h, b.witness->h);
    EXPECT_EQ(a.notes, b.notes);
  }
}

TEST(Classify, OrderTwoContractedIsNeverRefuted) {
  std::mt19937_64 rng(43);
  int seen = 0;
  for (int i = 0; i < 800 && seen < 25; ++i) {
    Staircase s = oracle::random_staircase(rng, 7);
    if (s.order() != 2 || !is_contracted(s)) continue;
    ++seen;
    auto r = classify(to_ideal<Q>(s));
    EXPECT_NE(r.verdict, Verdict::NotAg) << s.to_string();
    if (r.refutation) EXPECT_LE(r.refutation->min_sum, 2) << s.to_string();
  }
  EXPECT_GE(seen, 5);
}

TEST(Families, Examples) {
  EXPECT_EQ(strings(o3(6, 3, 5)), (std::vector<std::string>{"x^3", "x^2*y^3", "x*y^5", "y^6"}));
  EXPECT_TRUE(ideal_equal(make_family("power-order", {{"m", 2}, {"n", 5}}), I("x^2, x y^4, y^5")));
  EXPECT_TRUE(ideal_equal(make_family("remark43", {{"m", 4}}), I("x^4, y^8, x^3 y^3, x^2 y^5, x y^7")));
  EXPECT_TRUE(ideal_equal(make_family("three-gen", {{"n", 4}, {"alpha", 2}}), I("x^3, x^2 y^2, y^4")));
  auto prod = make_family("products", {{"m", 2}, {"n", 3}, {"alpha", 2}, {"beta", 2}});
  EXPECT_TRUE(ideal_equal(prod, ideal_product(make_family("power-order", {{"m", 2}, {"n", 3}}),
                                              make_family("power-order", {{"m", 2}, {"n", 2}}))));
}

TEST(Families, PowerOrderShape) {
  for (int m = 2; m <= 5; ++m) {
    for (int n = m; n <= 10; ++n) {
      auto ideal = make_family("power-order", {{"m", m}, {"n", n}});
      EXPECT_EQ(ideal_order(ideal), m);
      EXPECT_TRUE(is_contracted(ideal));
      auto s = staircase_of(ideal);
      ASSERT_TRUE(s.has_value());
      if (n >= 2 * m) EXPECT_TRUE(newton_closure(*s).contains(1, n - 2) && !s->contains(1, n - 2)) << m << "," << n;
    }
  }
}

TEST(Families, Errors) {
  EXPECT_THROW(o3(6, 3, 3), BadParameters);
  EXPECT_THROW(o3(5, 0, 3), BadParameters);
  EXPECT_THROW(make_family("three-gen", {{"n", 6}, {"alpha", 2}}), BadParameters);
  EXPECT_THROW(make_family("remark43", {{"m", 3}}), BadParameters);
  EXPECT_THROW(make_family("power-order", {{"m", 3}}), BadParameters);
  EXPECT_THROW(make_family("nope", {}), BadParameters);
}
