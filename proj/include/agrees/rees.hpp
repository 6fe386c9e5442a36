#pragma once

// Defining ideal of the Rees algebra R[It] as a quotient of k[x,y,T_1..T_s]:
// the kernel of T_i ↦ f_i t, obtained by eliminating t from (T_i − f_i t).

#include <algorithm>
#include <utility>
#include <vector>

#include "agrees/ideal.hpp"

namespace agrees {

/// (T-degree, lowest xy-degree among the terms).
using Bidegree = std::pair<int, int>;

template <Field F>
struct ReesPresentation {
  /// k[x, y, t, T_1..T_s]; the defining generators do not involve t.
  Ring ring;
  std::vector<Polynomial<F>> source;
  /// Minimal generators, sorted by bidegree then leading monomial.
  std::vector<Polynomial<F>> defining_gens;
  std::vector<Bidegree> bidegrees;

  std::vector<int> t_degrees() const {
    std::vector<int> out;
    for (auto [d, e] : bidegrees) out.push_back(d);
    return out;
  }
};

namespace detail {

inline std::uint32_t t_mask(int s) {
  std::uint32_t mask = 0;
  for (int i = 1; i <= s; ++i) mask |= 1U << Ring::big_t(i);
  return mask;
}

template <Field F>
Bidegree bidegree_of(const Polynomial<F>& g, int s) {
  const std::uint32_t tm = t_mask(s);
  const std::uint32_t xy = (1U << Ring::kX) | (1U << Ring::kY);
  int low = -1;
  for (const auto& term : g.terms()) {
    int d = static_cast<int>(term.mono.degree_in(xy));
    if (low < 0 || d < low) low = d;
  }
  return {static_cast<int>(g.leading_monomial().degree_in(tm)), low};
}

}  // namespace detail

/// Default caps: 5000 basis elements, degree 40.
template <Field F>
ReesPresentation<F> rees_defining_ideal(const IdealHandle<F>& ideal, GbBudget budget = {5000, 40}) {
  if (!is_m_primary(ideal)) throw NotZeroDimensional("rees_defining_ideal: ideal is not m-primary");
  std::vector<Polynomial<F>> f;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) f.push_back(g);
  }
  const int s = static_cast<int>(f.size());
  const Ring ring = Ring::rees(s);
  const MonomialOrder elim = MonomialOrder::eliminate_t();
  const FieldConfig& cfg = ideal.field();
  const Polynomial<F> t = variable<F>(ring, Ring::kT, cfg).with_order(elim);

  std::vector<Polynomial<F>> gens;
  for (int i = 1; i <= s; ++i) {
    gens.push_back(variable<F>(ring, Ring::big_t(i), cfg).with_order(elim) -
                   f[static_cast<std::size_t>(i - 1)].in_ring(ring, elim) * t);
  }
  GroebnerBasis<F> gb = groebner_basis<F>(gens, elim, budget);
  std::vector<Polynomial<F>> kernel;
  for (const auto& g : gb.elements()) {
    if (g.max_exponent(Ring::kT) == 0) kernel.push_back(g.with_order(MonomialOrder::grevlex()));
  }

  // Minimal generators: a basis of K/𝔐K with 𝔐 = (x, y, T_1..T_s), chosen by
  // increasing bidegree.
  std::stable_sort(kernel.begin(), kernel.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    Bidegree da = detail::bidegree_of(a, s), db = detail::bidegree_of(b, s);
    if (da != db) return da < db;
    return MonomialOrder::grevlex().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial<F>> mk;
  for (int v = 0; v < ring.arity(); ++v) {
    if (v == Ring::kT) continue;
    const Polynomial<F> var = variable<F>(ring, v, cfg);
    for (const auto& g : kernel) mk.push_back(var * g);
  }
  ReesPresentation<F> out{ring, f, {}, {}};
  if (kernel.empty()) return out;
  GroebnerBasis<F> mk_gb = groebner_basis<F>(mk, MonomialOrder::grevlex(), budget);
  EchelonBasis<F> span;
  for (const auto& g : kernel) {
    if (span.insert(normal_form(g, mk_gb))) {
      out.defining_gens.push_back(g);
      out.bidegrees.push_back(detail::bidegree_of(g, s));
    }
  }
  return out;
}

template <Field F>
std::vector<Bidegree> presentation_bidegrees(const IdealHandle<F>& ideal) {
  return rees_defining_ideal(ideal).bidegrees;
}

/// Every defining generator vanishes under T_i ↦ f_i t.
template <Field F>
bool substitution_check(const ReesPresentation<F>& p, const FieldConfig& cfg = {}) {
  const int s = static_cast<int>(p.source.size());
  const MonomialOrder order = MonomialOrder::grevlex();
  const Polynomial<F> t = variable<F>(p.ring, Ring::kT, cfg);
  std::vector<Polynomial<F>> images{variable<F>(p.ring, Ring::kX, cfg), variable<F>(p.ring, Ring::kY, cfg), t};
  for (int i = 0; i < s; ++i) images.push_back(p.source[static_cast<std::size_t>(i)].in_ring(p.ring, order) * t);
  return std::all_of(p.defining_gens.begin(), p.defining_gens.end(), [&](const Polynomial<F>& g) {
    return substitute<F>(g, std::span<const Polynomial<F>>(images)).is_zero();
  });
}

}  // namespace agrees
