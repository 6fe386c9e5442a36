#pragma once

// Slow, independent reference implementations used by the test suites and the
// acceptance checks. Nothing here shares code paths with the fast routines it
// is compared against beyond the basic data types.

#include <algorithm>
#include <random>
#include <vector>

#include "agrees/engine.hpp"
#include "agrees/staircase.hpp"

namespace agrees::oracle {

/// Lattice points (a, b) of the box [0, A] x [0, B] accepted by `in`,
/// minimalized into a staircase.
template <class Pred>
Staircase staircase_from_box(int max_a, int max_b, Pred in) {
  std::vector<ExpPair> pts;
  for (int a = 0; a <= max_a; ++a) {
    for (int b = 0; b <= max_b; ++b) {
      if (in(a, b)) pts.emplace_back(a, b);
    }
  }
  return staircase_normalize(std::move(pts));
}

/// Counts monomials outside S one by one.
inline long colength(const Staircase& s) {
  long count = 0;
  for (int a = 0; a < s.x_power(); ++a) {
    for (int b = 0; b < s.y_power(); ++b) count += s.contains(a, b) ? 0 : 1;
  }
  return count;
}

/// x^a y^b ∈ ST iff some generator of S divides it with the cofactor in T.
inline Staircase product(const Staircase& s, const Staircase& t) {
  const int ma = s.x_power() + t.x_power(), mb = s.y_power() + t.y_power();
  return staircase_from_box(ma, mb, [&](int a, int b) {
    return std::any_of(s.gens().begin(), s.gens().end(), [&](const ExpPair& g) {
      return g.first <= a && g.second <= b && t.contains(a - g.first, b - g.second);
    });
  });
}

inline Staircase colon(const Staircase& s, const Staircase& t) {
  return staircase_from_box(s.x_power(), s.y_power(), [&](int a, int b) {
    return std::all_of(t.gens().begin(), t.gens().end(),
                       [&](const ExpPair& g) { return s.contains(a + g.first, b + g.second); });
  });
}

inline Staircase intersection(const Staircase& s, const Staircase& t) {
  return staircase_from_box(std::max(s.x_power(), t.x_power()), std::max(s.y_power(), t.y_power()),
                            [&](int a, int b) { return s.contains(a, b) && t.contains(a, b); });
}

/// x^a y^b is integral over S iff (x^a y^b)^k ∈ S^k for some k <= kmax.
inline bool integral_by_powers(const Staircase& s, int a, int b, int kmax = 12) {
  Staircase power = s;
  for (int k = 1; k <= kmax; ++k) {
    if (power.contains(k * a, k * b)) return true;
    power = staircase_product(power, s);
  }
  return false;
}

/// Random m-primary staircase with pure powers <= max_exp.
inline Staircase random_staircase(std::mt19937_64& rng, int max_exp, int extra = 3) {
  std::uniform_int_distribution<int> e(1, max_exp);
  std::uniform_int_distribution<int> k(0, extra);
  std::vector<ExpPair> pts{{e(rng), 0}, {0, e(rng)}};
  for (int i = k(rng); i > 0; --i) {
    int a = e(rng) - 1, b = e(rng) - 1;
    if (a + b > 0) pts.emplace_back(a, b);
  }
  return staircase_normalize(std::move(pts));
}

/// Stability of (x^3, x^2 y^alpha, x y^beta, y^n) by the closed-form inequalities.
inline bool o3_stable(int n, int alpha, int beta) { return beta <= 2 * alpha && n <= alpha + beta && n + alpha <= 2 * beta; }

/// min over a coefficient grid of μ(IJ/Ih) + μ(𝔪J/𝔪h), each computed from
/// colengths of Groebner bases: μ(IJ/Ih) = ℓ(R/(Ih + 𝔪IJ)) − ℓ(R/IJ).
template <Field F>
long min_sum_by_colength(const IdealHandle<F>& ideal, const IdealHandle<F>& j, int range = 2) {
  const FieldConfig& cfg = ideal.field();
  IdealHandle<F> m = maximal_ideal<F>(cfg);
  IdealHandle<F> ij = ideal_product(ideal, j);
  IdealHandle<F> mij = ideal_product(m, ij);
  IdealHandle<F> mj = ideal_product(m, j);
  IdealHandle<F> m2j = ideal_product(m, mj);
  const long len_ij = colength(ij), len_mj = colength(mj);
  const std::size_t nj = j.generators().size();
  std::vector<int> c(nj, -range);
  long best = -1;
  for (;;) {
    if (std::any_of(c.begin(), c.end(), [](int v) { return v != 0; })) {
      Polynomial<F> h(Ring::base());
      for (std::size_t i = 0; i < nj; ++i) h += j.generators()[i].scaled(field_int<F>(c[i], cfg));
      long a = colength(ideal_sum(ideal_scale(h, ideal), mij)) - len_ij;
      long b = colength(ideal_sum(ideal_scale(h, m), m2j)) - len_mj;
      if (best < 0 || a + b < best) best = a + b;
    }
    std::size_t i = 0;
    while (i < nj && c[i] == range) c[i++] = -range;
    if (i == nj) break;
    ++c[i];
  }
  return best;
}

/// Reducedness plus every S-polynomial reducing to zero.
template <Field F>
bool is_reduced_groebner(const GroebnerBasis<F>& gb) {
  const auto& els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (!els[i].leading_coeff().is_one()) return false;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : els[i].terms()) {
        if (els[j].leading_monomial().divides(t.mono)) return false;
      }
      if (j > i && !normal_form(detail::s_polynomial(els[i], els[j]), gb).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace agrees::oracle
