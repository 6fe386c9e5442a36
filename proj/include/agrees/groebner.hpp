#pragma once

// Buchberger's algorithm with the sugar selection strategy, the coprime
// leading-monomial criterion and the chain criterion. Bases are returned
// reduced, monic and sorted by ascending leading monomial, so identical input
// ideals give identical bases.

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "agrees/polynomial.hpp"

namespace agrees {

/// Resource caps for elimination-heavy computations. Zero means unlimited.
struct GbBudget {
  std::size_t max_polys = 0;
  std::uint32_t max_degree = 0;
};

template <Field F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial<F>> elements)
      : ring_(ring), order_(order), elements_(std::move(elements)) {}

  Ring ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial<F>>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  bool is_unit_ideal() const noexcept {
    return elements_.size() == 1 && elements_.front().leading_monomial().is_one();
  }

  /// Smallest e with var^e a leading monomial, or -1.
  int pure_power(int var) const {
    int best = -1;
    for (const auto& g : elements_) {
      const Monomial& m = g.leading_monomial();
      if (m.degree() > 0 && m.exponent(var) == static_cast<int>(m.degree())) {
        if (best < 0 || m.exponent(var) < best) best = m.exponent(var);
      }
    }
    if (is_unit_ideal()) return 0;
    return best;
  }

 private:
  Ring ring_{};
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Polynomial<F>> elements_;
};

namespace detail {

/// Full reduction of p (already in the basis order) by the given monic-or-not
/// polynomials, all sharing one order.
template <Field F>
Polynomial<F> reduce_by(Polynomial<F> p, std::span<const Polynomial<F>> basis, std::size_t skip = ~std::size_t{0}) {
  std::vector<Term<F>> rem;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Polynomial<F>* divisor = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip) continue;
      if (basis[i].leading_monomial().divides(lm)) {
        divisor = &basis[i];
        break;
      }
    }
    if (divisor != nullptr) {
      F c = p.leading_coeff() / divisor->leading_coeff();
      p = p.sub_mul(c, lm / divisor->leading_monomial(), *divisor);
    } else {
      rem.push_back(p.leading());
      p.pop_leading();
    }
  }
  return Polynomial<F>::from_sorted(p.ring(), p.order(), std::move(rem));
}

template <Field F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial<F> a = f.mul_term(l / f.leading_monomial(), f.leading_coeff().inverse());
  return a.sub_mul(g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

}  // namespace detail

template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  if (!(p.ring() == gb.ring())) throw RingMismatch("normal_form: polynomial and basis live in different rings");
  return detail::reduce_by<F>(p.with_order(gb.order()), gb.elements());
}

template <Field F>
GroebnerBasis<F> groebner_basis(std::span<const Polynomial<F>> generators, const MonomialOrder& order,
                                const GbBudget& budget = {}) {
  if (generators.empty()) throw EmptyIdeal("groebner_basis: no generators");
  const Ring ring = generators.front().ring();

  std::vector<Polynomial<F>> basis;
  std::vector<std::uint32_t> sugar;
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw RingMismatch("groebner_basis: generators from different rings");
    if (g.is_zero()) continue;
    basis.push_back(g.with_order(order).monic());
    sugar.push_back(g.max_degree());
  }
  if (basis.empty()) return GroebnerBasis<F>(ring, order, {});

  // Pair queue ordered by (sugar, lcm ascending, i, j).
  struct Pair {
    std::uint32_t sugar;
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto make_pair = [&](std::size_t i, std::size_t j) {
    const Monomial& a = basis[i].leading_monomial();
    const Monomial& b = basis[j].leading_monomial();
    Monomial l = a.lcm(b);
    std::uint32_t s = std::max(sugar[i] + l.degree() - a.degree(), sugar[j] + l.degree() - b.degree());
    queue.insert(Pair{s, l, i, j});
    pending.insert({i, j});
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) make_pair(i, j);
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    const Monomial& li = basis[p.i].leading_monomial();
    const Monomial& lj = basis[p.j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis[k].leading_monomial().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
    }
    if (chain) continue;

    Polynomial<F> r = detail::reduce_by<F>(detail::s_polynomial(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    r = r.monic();
    if (budget.max_degree != 0 && r.max_degree() > budget.max_degree) {
      throw EliminationBudgetExceeded("Groebner basis element exceeds degree " + std::to_string(budget.max_degree));
    }
    basis.push_back(std::move(r));
    sugar.push_back(p.sugar);
    if (budget.max_polys != 0 && basis.size() > budget.max_polys) {
      throw EliminationBudgetExceeded("Groebner basis exceeds " + std::to_string(budget.max_polys) + " polynomials");
    }
    const std::size_t n = basis.size() - 1;
    for (std::size_t i = 0; i < n; ++i) make_pair(i, n);
  }

  // Minimalize, then tail-reduce each survivor against the others.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial<F>> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial<F>& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial<F>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    reduced.push_back(detail::reduce_by<F>(minimal[i], minimal, i).monic());
  }
  return GroebnerBasis<F>(ring, order, std::move(reduced));
}

template <Field F>
GroebnerBasis<F> groebner_basis(const std::vector<Polynomial<F>>& generators, const MonomialOrder& order,
                                const GbBudget& budget = {}) {
  return groebner_basis<F>(std::span<const Polynomial<F>>(generators), order, budget);
}

}  // namespace agrees
