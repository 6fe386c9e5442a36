#pragma once

// Reproduction checks shared by `agrees repro` and the acceptance binary.
// Each check recomputes a family of results from scratch and compares them
// with the expected values; runtime limits are part of the verdict.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "agrees/families.hpp"
#include "agrees/parse.hpp"
#include "agrees/rees.hpp"
#include "agrees/testing/oracles.hpp"

namespace agrees {

struct CheckResult {
  std::string id;
  std::string expected;
  std::string got;
  bool pass = false;
  double seconds = 0.0;
};

struct CheckSpec {
  std::string id;
  std::string expected;
  /// Wall-clock limit in seconds; 0 means none.
  double limit = 0.0;
  /// Returns an empty string on success, otherwise the first discrepancy;
  /// `got` receives a short summary either way.
  std::function<std::string(std::string& got)> body;
};

namespace detail {

using Q = Rational;

inline IdealHandle<Q> fam(const std::string& name, FamilyParams p) { return make_family<Q>(name, p); }

inline ClassifyConfig exact_config(std::uint64_t seed = 0) {
  ClassifyConfig c;
  c.seed = seed;
  return c;
}

inline std::string tuple_str(std::initializer_list<int> v) {
  std::string out = "(";
  bool first = true;
  for (int x : v) {
    out += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return out + ")";
}

inline std::string check_simplest(std::string& got) {
  AGReport r = classify(fam("contracted-o3", {{"n", 6}, {"alpha", 3}, {"beta", 5}}), exact_config());
  if (!r.refutation) {
    got = to_string(r.verdict) + " without refutation data";
    return got;
  }
  const auto& f = *r.refutation;
  got = to_string(r.verdict) + " mu(IJ)=" + std::to_string(f.mu_ij) + " mu(mJ)=" + std::to_string(f.mu_mj) +
        " min_sum=" + std::to_string(f.min_sum) + " threshold=" + std::to_string(f.threshold);
  if (r.verdict != Verdict::NotAg || f.mu_ij != 6 || f.mu_mj != 4 || f.min_sum != 5 || f.threshold != 4) return got;
  return "";
}

inline std::string check_stability_table(int max_n, std::string& got) {
  int count = 0, stable = 0;
  for (int n = 3; n <= max_n; ++n) {
    for (int b = 2; b < n; ++b) {
      for (int a = 1; a < b; ++a) {
        IdealHandle<Q> ideal = fam("contracted-o3", {{"n", n}, {"alpha", a}, {"beta", b}});
        bool s = is_stable(ideal, monomial_ideal<Q>({{3, 0}, {0, n}}));
        ++count;
        stable += s ? 1 : 0;
        if (s != oracle::o3_stable(n, a, b)) {
          got = "mismatch at " + tuple_str({n, a, b});
          return got;
        }
      }
    }
  }
  got = std::to_string(count) + " tuples agree, " + std::to_string(stable) + " stable";
  return "";
}

inline std::string check_boundary(std::string& got) {
  if (std::string e = check_stability_table(9, got); !e.empty()) return e;
  const std::string table = got;
  int certified = 0;
  for (int n = 3; n <= 9; ++n) {
    for (int b = 2; b < n; ++b) {
      for (int a = 1; a < b; ++a) {
        if (n + a != 2 * b || !oracle::o3_stable(n, a, b)) continue;
        IdealHandle<Q> ideal = fam("contracted-o3", {{"n", n}, {"alpha", a}, {"beta", b}});
        AGReport r = classify(ideal, exact_config());
        if (r.verdict != Verdict::AgCertified || !r.witness) {
          got = to_string(r.verdict) + " at " + tuple_str({n, a, b});
          return got;
        }
        // the displayed certificate (y, x^3, x^2 - y^{n-alpha}) is in the pool and verifies
        ReductionData<Q> red = find_reduction(ideal, 0);
        IdealHandle<Q> j = canonical_colon(ideal, red);
        Polynomial<Q> h = parse_polynomial<Q>("x^2 - y^" + std::to_string(n - a));
        auto pool = h_candidates(j, 64, 0);
        bool in_pool = std::any_of(pool.begin(), pool.end(), [&](const Polynomial<Q>& c) { return c == h; });
        auto w = AGWitness<Q>::verify(ideal, j, parse_polynomial<Q>("y"), parse_polynomial<Q>("x^3"), h);
        if (!in_pool || !w) {
          got = "certificate x^2 - y^(n-alpha) " + std::string(in_pool ? "fails" : "missing") + " at " +
                tuple_str({n, a, b});
          return got;
        }
        ++certified;
      }
    }
  }
  got = table + "; " + std::to_string(certified) + " boundary tuples AG_CERTIFIED";
  return "";
}

inline std::string check_strict_region(std::string& got) {
  int rows = 0;
  for (int n = 3; n <= 9; ++n) {
    for (int b = 2; b < n; ++b) {
      for (int a = 1; a < b; ++a) {
        if (!oracle::o3_stable(n, a, b) || !(n < a + b && n + a < 2 * b && b < 2 * a)) continue;
        AGReport r = classify(fam("contracted-o3", {{"n", n}, {"alpha", a}, {"beta", b}}), exact_config());
        ++rows;
        if (r.verdict != Verdict::NotAg) {
          got = to_string(r.verdict) + " at " + tuple_str({n, a, b});
          return got;
        }
      }
    }
  }
  got = std::to_string(rows) + " strict-region tuples NOT_AG";
  return "";
}

inline std::string check_three_gen(std::string& got) {
  int ag = 0, not_ag = 0;
  for (int n = 3; n <= 9; ++n) {
    for (int a = 1; a < n; ++a) {
      if (2 * a < n) continue;
      AGReport r = classify(fam("three-gen", {{"alpha", a}, {"n", n}}), exact_config());
      const std::string at = " at " + tuple_str({a, n});
      if (2 * a == n) {
        if (r.verdict != Verdict::AgCertified || !r.witness || r.witness->f != "y" ||
            r.witness->g != "y^" + std::to_string(n) || r.witness->h != "x") {
          got = to_string(r.verdict) + (r.witness ? " witness (" + r.witness->f + ", " + r.witness->g + ", " + r.witness->h + ")" : "") + at;
          return got;
        }
        ++ag;
      } else {
        if (r.verdict != Verdict::NotAg || !r.refutation || r.refutation->mu_ij != 4 || r.refutation->mu_mj != 3) {
          got = to_string(r.verdict) + at;
          return got;
        }
        ++not_ag;
      }
    }
  }
  got = std::to_string(ag) + " AG_CERTIFIED with (y, y^n, x), " + std::to_string(not_ag) + " NOT_AG with mu 4/3";
  return "";
}

inline std::string check_power_order(std::string& got) {
  int rows = 0, gains = 0;
  for (int m = 2; m <= 5; ++m) {
    for (int n = m; n <= 10; ++n) {
      IdealHandle<Q> ideal = fam("power-order", {{"m", m}, {"n", n}});
      const std::string at = " at " + tuple_str({m, n});
      if (!is_contracted(ideal) || ideal_order(ideal) != m) return got = "not contracted of order m" + at;
      ReductionData<Q> red = find_reduction(ideal, 0);
      if (!red.stable || !ideal_equal(red.q, monomial_ideal<Q>({{m, 0}, {0, n}}))) return got = "reduction" + at;
      IdealHandle<Q> j = canonical_colon(ideal, red);
      if (!ideal_equal(j, ideal_power(maximal_ideal<Q>(), static_cast<unsigned>(m - 1)))) return got = "J != m^(m-1)" + at;
      AGReport r = classify(ideal, exact_config());
      if (r.verdict != Verdict::AgCertified) return got = to_string(r.verdict) + at;
      if (n >= 2 * m) {
        Staircase s = *staircase_of(ideal);
        if (s.contains(1, n - 2) || !newton_closure(s).contains(1, n - 2)) return got = "closure gain" + at;
        ++gains;
      }
      ++rows;
    }
  }
  got = std::to_string(rows) + " rows AG_CERTIFIED, " + std::to_string(gains) + " closures gain x*y^(n-2)";
  return "";
}

inline std::string check_high_order(std::string& got) {
  std::ostringstream os;
  for (int m = 4; m <= 5; ++m) {
    IdealHandle<Q> ideal = fam("remark43", {{"m", m}});
    AGReport r = classify(ideal, exact_config());
    const std::string at = " at m=" + std::to_string(m);
    if (!r.contracted || r.order != m) return got = "not contracted of order m" + at;
    if (!r.reduction || !r.reduction->stable) return got = "not stable" + at;
    if (r.verdict != Verdict::NotAg || !r.refutation) return got = to_string(r.verdict) + at;
    os << (m == 4 ? "" : "; ") << "m=" << m << " NOT_AG min_sum=" << r.refutation->min_sum
       << " threshold=" << r.refutation->threshold;
  }
  got = os.str();
  return "";
}

inline std::string check_prop_suite(std::string& got) {
  std::mt19937_64 rng(20240601);
  int contracted = 0, stable = 0, products = 0;
  std::vector<Staircase> pool;
  for (int i = 0; i < 200; ++i) {
    Staircase s = oracle::random_staircase(rng, 7, 4);
    IdealHandle<Q> ideal = to_ideal<Q>(s);
    const std::string at = " at " + s.to_string();
    std::uniform_int_distribution<long> coef(1, 9);
    Polynomial<Q> ell = parse_polynomial<Q>(std::to_string(coef(rng)) + "x + " + std::to_string(coef(rng)) + "y");
    const bool by_count = min_gens(ideal) == ideal_order(ideal) + 1;
    if (by_count != is_m_full(ideal, ell)) return got = "m-full mismatch" + at;
    if (by_count) {
      ++contracted;
      pool.push_back(s);
      ReductionData<Q> red = find_reduction(ideal, static_cast<std::uint64_t>(i));
      if (red.stable) {
        ++stable;
        IdealHandle<Q> j = canonical_colon(ideal, red);
        if (ideal_order(ideal) != ideal_order(j) + 1) return got = "o(I) != o(J) + 1" + at;
      }
    }
    IdealHandle<Q> q = monomial_ideal<Q>({{s.x_power(), 0}, {0, s.y_power()}});
    IdealHandle<Q> link = ideal_colon(q, ideal);
    if (!ideal_equal(ideal_colon(q, link), ideal)) return got = "Q:(Q:I) != I" + at;
    if (colength(q) != colength(ideal) + colength(link)) return got = "colength additivity" + at;
  }
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    IdealHandle<Q> prod = ideal_product(to_ideal<Q>(pool[i]), to_ideal<Q>(pool[i + 1]));
    if (min_gens(prod) != ideal_order(prod) + 1) return got = "product not contracted";
    ++products;
  }
  got = "200 ideals, " + std::to_string(contracted) + " contracted, " + std::to_string(stable) + " stable, " +
        std::to_string(products) + " products contracted";
  return "";
}

/// Random contracted monomial ideal of order 2, (x^a, x^c y^d, y^b), with
/// (x^a, y^b) a reduction.
inline Staircase random_order2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(2, 10);
  for (;;) {
    int a = e(rng), b = e(rng);
    int c = std::uniform_int_distribution<int>(1, a - 1)(rng);
    int d = std::uniform_int_distribution<int>(1, b - 1)(rng);
    if (std::min({a, b, c + d}) != 2 || c * b + d * a < a * b) continue;
    return staircase_normalize({{a, 0}, {c, d}, {0, b}});
  }
}

inline std::string check_order_two(std::string& got) {
  std::mt19937_64 rng(77);
  int certified = 0, unknown = 0;
  for (int i = 0; i < 100; ++i) {
    Staircase s = random_order2(rng);
    IdealHandle<Q> ideal = to_ideal<Q>(s);
    const std::string at = " at " + s.to_string();
    if (!is_contracted(s) || s.order() != 2) return got = "generator" + at;
    IdealHandle<Q> q = monomial_ideal<Q>({{s.x_power(), 0}, {0, s.y_power()}});
    if (!is_stable(ideal, q)) return got = "not stable" + at;
    AGReport r = classify(ideal, exact_config(static_cast<std::uint64_t>(i)));
    if (r.verdict == Verdict::NotAg) return got = "NOT_AG" + at;
    ReductionData<Q> red = find_reduction(ideal, 0);
    IdealHandle<Q> j = canonical_colon(ideal, red);
    if (j.generators().size() >= 2) {
      RefutationData ref = necessary_bound(ideal, red, j, static_cast<std::uint64_t>(i));
      if (ref.min_sum > 2) return got = "min_sum " + std::to_string(ref.min_sum) + at;
    }
    certified += r.verdict == Verdict::AgCertified ? 1 : 0;
    unknown += r.verdict == Verdict::Unknown ? 1 : 0;
  }
  got = "100 stable, " + std::to_string(certified) + " AG_CERTIFIED, " + std::to_string(unknown) + " UNKNOWN, 0 NOT_AG";
  return "";
}

inline std::string check_rees(std::string& got) {
  ReesPresentation<Q> p = rees_defining_ideal(monomial_ideal<Q>({{3, 0}, {0, 6}}));
  Polynomial<Q> expect = parse_polynomial<Q>("y^6 T1 - x^3 T2", Ring::rees(2));
  if (p.defining_gens.size() != 1 || !(p.defining_gens[0] == expect || p.defining_gens[0] == -expect)) {
    return got = "(x^3, y^6) presentation differs";
  }
  std::vector<Staircase> tests;
  for (int b = 2; b <= 8; ++b) {
    for (int d = 1; d < b; ++d) {
      if (2 * d >= b) tests.push_back(staircase_normalize({{2, 0}, {1, d}, {0, b}}));
    }
  }
  for (int n = 3; n <= 7; ++n) {
    for (int a = (n + 1) / 2; a < n; ++a) tests.push_back(staircase_normalize({{3, 0}, {2, a}, {0, n}}));
  }
  for (const auto& s : tests) {
    IdealHandle<Q> ideal = to_ideal<Q>(s);
    if (!is_stable(ideal, monomial_ideal<Q>({{s.x_power(), 0}, {0, s.y_power()}}))) return got = "not stable " + s.to_string();
    ReesPresentation<Q> r = rees_defining_ideal(ideal);
    std::vector<int> t = r.t_degrees();
    std::sort(t.begin(), t.end());
    if (t != std::vector<int>{1, 1, 2} || !substitution_check(r)) return got = "shape at " + s.to_string();
  }
  got = "(x^3, y^6) -> y^6*T1 - x^3*T2; " + std::to_string(tests.size()) + " three-generated ideals -> {1,1,2}";
  return "";
}

inline std::string check_oracles(std::string& got) {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 500; ++i) {
    Staircase s = oracle::random_staircase(rng, 6), t = oracle::random_staircase(rng, 6);
    IdealHandle<Q> is = to_ideal<Q>(s), it = to_ideal<Q>(t);
    const std::string at = " at " + s.to_string() + ", " + t.to_string();
    if (mono_colength(s) != colength(is)) return got = "colength" + at;
    if (!ideal_equal(ideal_product(is, it), to_ideal<Q>(staircase_product(s, t)))) return got = "product" + at;
    if (!ideal_equal(ideal_colon(is, it), to_ideal<Q>(staircase_colon(s, t)))) return got = "colon" + at;
  }
  for (int i = 0; i < 100; ++i) {
    Staircase s = oracle::random_staircase(rng, 8);
    Staircase c = newton_closure(s);
    for (int a = 0; a <= s.x_power(); ++a) {
      for (int b = 0; b <= s.y_power(); ++b) {
        if (c.contains(a, b) != oracle::integral_by_powers(s, a, b, 12)) {
          return got = "closure at x^" + std::to_string(a) + "*y^" + std::to_string(b) + " for " + s.to_string();
        }
      }
    }
  }
  got = "500 pairs and 100 closures agree";
  return "";
}

}  // namespace detail

/// Ordered catalog; the first ten are the acceptance criteria.
inline const std::vector<CheckSpec>& check_catalog() {
  static const std::vector<CheckSpec> catalog{
      {"thm14-simplest", "NOT_AG, mu(IJ)=6, mu(mJ)=4, min_sum 5 > threshold 4", 2.0, detail::check_simplest},
      {"thm42-boundary", "stability matches the inequalities for n<=9; n+alpha=2beta stable tuples AG_CERTIFIED", 30.0,
       detail::check_boundary},
      {"thm14-region", "every stable strict-region tuple with n<=9 NOT_AG", 60.0, detail::check_strict_region},
      {"thm51-branches", "AG_CERTIFIED with (y, y^n, x) iff 2alpha=n; NOT_AG with mu 4/3 iff 2alpha>n", 0.0,
       detail::check_three_gen},
      {"thm27-family", "contracted, order m, Q=(x^m,y^n), J=m^(m-1), AG_CERTIFIED; closure gains x*y^(n-2)", 0.0,
       detail::check_power_order},
      {"remark43", "m=4,5 contracted, order m, stable, NOT_AG", 0.0, detail::check_high_order},
      {"prop-suite", "m-full iff mu=o+1, o(I)=o(J)+1, linkage, products contracted on 200 ideals", 120.0,
       detail::check_prop_suite},
      {"lemma-o2", "100 order-2 contracted ideals stable, never NOT_AG, min_sum <= 2", 0.0, detail::check_order_two},
      {"rees-shapes", "(x^3,y^6) one relation; three-generated stable ideals T-degrees {1,1,2}", 10.0,
       detail::check_rees},
      {"oracle-eq", "staircase and Groebner paths agree; closure matches power membership", 0.0,
       detail::check_oracles},
      {"prop41-boundary", "stability truth table for 0<alpha<beta<n<=7", 0.0,
       [](std::string& got) { return detail::check_stability_table(7, got); }},
  };
  return catalog;
}

inline CheckResult run_check(const CheckSpec& spec) {
  CheckResult out{spec.id, spec.expected, "", false, 0.0};
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = spec.body(out.got);
  } catch (const std::exception& e) {
    failure = out.got = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = failure.empty();
  if (out.pass && spec.limit > 0 && out.seconds > spec.limit) {
    out.pass = false;
    out.got += " (over the " + std::to_string(static_cast<int>(spec.limit)) + " s limit)";
  }
  return out;
}

inline CheckResult run_check(const std::string& id) {
  for (const auto& spec : check_catalog()) {
    if (spec.id == id) return run_check(spec);
  }
  throw UnknownCheckId("unknown check id '" + id + "'");
}

inline std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  expected: " << r.expected << "  got: " << r.got << "  ("
     << r.seconds << " s)";
  return os.str();
}

}  // namespace agrees
