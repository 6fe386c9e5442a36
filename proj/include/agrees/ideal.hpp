#pragma once

// Ideal arithmetic in k[x,y] driven by Groebner bases. Local invariants at the
// origin (colength, minimal generator count) are computed globally and are
// only meaningful for ideals supported at the origin, which is checked.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "agrees/groebner.hpp"
#include "agrees/linalg.hpp"

namespace agrees {

template <Field F>
class IdealHandle {
 public:
  IdealHandle(Ring ring, std::vector<Polynomial<F>> generators, FieldConfig field = {})
      : ring_(ring), field_(field), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators_) {
      if (!(g.ring() == ring_)) throw RingMismatch("ideal generator from a different ring");
      g = g.with_order(MonomialOrder::grevlex());
    }
  }

  Ring ring() const noexcept { return ring_; }
  const FieldConfig& field() const noexcept { return field_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return generators_; }

  bool all_monomial() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Polynomial<F>& g) { return g.is_zero() || g.is_monomial(); });
  }

  F one() const { return field_int<F>(1, field_); }

  /// Cached reduced basis; concurrent callers may both compute, the first
  /// insertion wins and both results are identical.
  std::shared_ptr<const GroebnerBasis<F>> basis(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->bases.find(order);
      if (it != cache_->bases.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis<F>>(groebner_basis<F>(generators_, order));
    std::lock_guard lock(cache_->mutex);
    return cache_->bases.emplace(order, std::move(gb)).first->second;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i != 0) out += ", ";
      out += generators_[i].to_string();
    }
    return out + ")";
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis<F>>> bases;
  };

  Ring ring_;
  FieldConfig field_;
  std::vector<Polynomial<F>> generators_;
  std::shared_ptr<Cache> cache_;
};

template <Field F>
Polynomial<F> variable(Ring ring, int index, const FieldConfig& cfg) {
  Monomial m(ring);
  m.set(index, 1);
  return Polynomial<F>::monomial(m, field_int<F>(1, cfg));
}

template <Field F>
Polynomial<F> monomial_xy(int a, int b, const FieldConfig& cfg) {
  return Polynomial<F>::monomial(Monomial::xy(a, b), field_int<F>(1, cfg));
}

template <Field F>
IdealHandle<F> maximal_ideal(const FieldConfig& cfg = {}) {
  return IdealHandle<F>(Ring::base(), {variable<F>(Ring::base(), Ring::kX, cfg), variable<F>(Ring::base(), Ring::kY, cfg)},
                        cfg);
}

template <Field F>
IdealHandle<F> unit_ideal(const FieldConfig& cfg = {}) {
  return IdealHandle<F>(Ring::base(), {Polynomial<F>::constant(Ring::base(), field_int<F>(1, cfg))}, cfg);
}

/// Ideal generated by monomials x^a y^b.
template <Field F>
IdealHandle<F> monomial_ideal(const std::vector<std::pair<int, int>>& exps, const FieldConfig& cfg = {}) {
  std::vector<Polynomial<F>> gens;
  gens.reserve(exps.size());
  for (auto [a, b] : exps) gens.push_back(monomial_xy<F>(a, b, cfg));
  return IdealHandle<F>(Ring::base(), std::move(gens), cfg);
}

namespace detail {

template <Field F>
void check_same_ring(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideals from different rings");
}

/// Drops zeros, duplicates and (for monomials) divisible generators.
template <Field F>
std::vector<Polynomial<F>> prune(std::vector<Polynomial<F>> gens) {
  std::erase_if(gens, [](const Polynomial<F>& g) { return g.is_zero(); });
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < gens.size() && !drop; ++j) {
      if (i == j) continue;
      if (gens[i] == gens[j]) {
        drop = j < i;
      } else if (gens[j].is_monomial() && gens[i].is_monomial() &&
                 gens[j].leading_monomial().divides(gens[i].leading_monomial())) {
        drop = true;
      }
    }
    if (!drop) out.push_back(gens[i]);
  }
  return out;
}

/// Exact division; throws if g does not divide p.
template <Field F>
Polynomial<F> exact_divide(Polynomial<F> p, const Polynomial<F>& g) {
  if (g.is_zero()) throw ZeroDivisorIdeal("division by zero polynomial");
  Polynomial<F> q(p.ring(), p.order());
  const Polynomial<F> gg = g.with_order(p.order());
  std::vector<Term<F>> quotient;
  while (!p.is_zero()) {
    if (!gg.leading_monomial().divides(p.leading_monomial())) {
      throw InvariantViolation("exact_divide: " + gg.to_string() + " does not divide the dividend");
    }
    Monomial m = p.leading_monomial() / gg.leading_monomial();
    F c = p.leading_coeff() / gg.leading_coeff();
    quotient.push_back({m, c});
    p = p.sub_mul(c, m, gg);
  }
  return Polynomial<F>::from_sorted(q.ring(), q.order(), std::move(quotient));
}

}  // namespace detail

template <Field F>
std::shared_ptr<const GroebnerBasis<F>> groebner_basis(const IdealHandle<F>& ideal,
                                                       const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (ideal.generators().empty()) throw EmptyIdeal("groebner_basis: ideal has no generators");
  return ideal.basis(order);
}

template <Field F>
bool ideal_contains(const IdealHandle<F>& ideal, const Polynomial<F>& p) {
  if (!(p.ring() == ideal.ring())) throw RingMismatch("ideal_contains: ring mismatch");
  return normal_form(p, *ideal.basis()).is_zero();
}

/// a ⊆ b.
template <Field F>
bool ideal_subset(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  detail::check_same_ring(a, b);
  auto gb = b.basis();
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial<F>& g) { return normal_form(g, *gb).is_zero(); });
}

template <Field F>
bool ideal_equal(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  return ideal_subset(a, b) && ideal_subset(b, a);
}

template <Field F>
IdealHandle<F> ideal_sum(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  detail::check_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealHandle<F>(a.ring(), std::move(gens), a.field());
}

/// Generators are the pairwise products (duplicates and divisible monomials pruned).
template <Field F>
IdealHandle<F> ideal_product(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  detail::check_same_ring(a, b);
  std::vector<Polynomial<F>> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  gens = detail::prune(std::move(gens));
  if (gens.empty()) gens.push_back(Polynomial<F>(a.ring()));
  return IdealHandle<F>(a.ring(), std::move(gens), a.field());
}

/// Principal ideal times an ideal.
template <Field F>
IdealHandle<F> ideal_scale(const Polynomial<F>& f, const IdealHandle<F>& b) {
  return ideal_product(IdealHandle<F>(b.ring(), {f}, b.field()), b);
}

/// Replaces non-monomial generator lists by the reduced grevlex basis when that
/// is shorter; monomial lists are already pruned by ideal_product.
template <Field F>
IdealHandle<F> compact(const IdealHandle<F>& a) {
  if (a.all_monomial()) return IdealHandle<F>(a.ring(), detail::prune(a.generators()), a.field());
  auto gb = a.basis();
  if (gb->size() < a.generators().size()) return IdealHandle<F>(a.ring(), gb->elements(), a.field());
  return a;
}

template <Field F>
IdealHandle<F> ideal_power(const IdealHandle<F>& a, unsigned k) {
  if (k == 0) return IdealHandle<F>(a.ring(), {Polynomial<F>::constant(a.ring(), a.one())}, a.field());
  IdealHandle<F> r = a;
  for (unsigned i = 1; i < k; ++i) r = compact(ideal_product(r, a));
  return r;
}

/// I ∩ J by eliminating an auxiliary variable: (t·I + (1−t)·J) ∩ k[x,y].
template <Field F>
IdealHandle<F> ideal_intersection(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  detail::check_same_ring(a, b);
  if (!(a.ring() == Ring::base())) throw RingMismatch("ideal_intersection is defined on the base ring");
  const Ring aux = Ring::rees(0);
  const MonomialOrder elim = MonomialOrder::eliminate_t();
  const F one = a.one();
  const Polynomial<F> t = variable<F>(aux, Ring::kT, a.field()).with_order(elim);
  const Polynomial<F> one_minus_t = Polynomial<F>::constant(aux, one, elim) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.in_ring(aux, elim));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(aux, elim));
  GroebnerBasis<F> gb = groebner_basis<F>(gens, elim);
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.elements()) {
    if (g.max_exponent(Ring::kT) == 0) out.push_back(g.in_ring(Ring::base(), MonomialOrder::grevlex()));
  }
  if (out.empty()) out.push_back(Polynomial<F>(Ring::base()));
  return IdealHandle<F>(Ring::base(), std::move(out), a.field());
}

/// I : (f) = (I ∩ (f)) / f.
template <Field F>
IdealHandle<F> ideal_colon_element(const IdealHandle<F>& a, const Polynomial<F>& f) {
  if (f.is_zero()) throw ZeroDivisorIdeal("colon by the zero polynomial");
  if (ideal_contains(a, f)) {
    return IdealHandle<F>(a.ring(), {Polynomial<F>::constant(a.ring(), a.one())}, a.field());
  }
  IdealHandle<F> meet = ideal_intersection(a, IdealHandle<F>(a.ring(), {f}, a.field()));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : meet.generators()) gens.push_back(detail::exact_divide(g, f));
  return IdealHandle<F>(a.ring(), std::move(gens), a.field());
}

/// I : J = ⋂_j (I : f_j).
template <Field F>
IdealHandle<F> ideal_colon(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  detail::check_same_ring(a, b);
  std::optional<IdealHandle<F>> acc;
  for (const auto& f : b.generators()) {
    if (f.is_zero()) continue;
    IdealHandle<F> c = ideal_colon_element(a, f);
    if (!acc) {
      acc = std::move(c);
    } else if (!c.basis()->is_unit_ideal()) {
      acc = acc->basis()->is_unit_ideal() ? std::move(c) : ideal_intersection(*acc, c);
    }
  }
  if (!acc) throw ZeroDivisorIdeal("colon by the zero ideal");
  return *acc;
}

/// True iff the ideal is supported at the origin only (finite colength).
template <Field F>
bool is_m_primary(const IdealHandle<F>& a) {
  auto gb = a.basis();
  return !gb->is_zero_ideal() && gb->pure_power(Ring::kX) >= 0 && gb->pure_power(Ring::kY) >= 0;
}

/// Number of standard monomials of the grevlex basis.
template <Field F>
long colength(const IdealHandle<F>& a) {
  if (!(a.ring() == Ring::base())) throw RingMismatch("colength is defined on the base ring");
  auto gb = a.basis();
  if (gb->is_unit_ideal()) return 0;
  const int ax = gb->pure_power(Ring::kX);
  const int by = gb->pure_power(Ring::kY);
  if (gb->is_zero_ideal() || ax < 0 || by < 0) {
    throw NotZeroDimensional("ideal " + a.to_string() + " is not supported at the origin only");
  }
  long count = 0;
  for (int i = 0; i < ax; ++i) {
    int bound = by;
    for (const auto& g : gb->elements()) {
      const Monomial& m = g.leading_monomial();
      if (m.exponent(Ring::kX) <= i) bound = std::min(bound, m.exponent(Ring::kY));
    }
    count += bound;
  }
  return count;
}

/// μ(I) = ℓ(R/𝔪I) − ℓ(R/I).
template <Field F>
long min_gens(const IdealHandle<F>& a) {
  return colength(ideal_product(maximal_ideal<F>(a.field()), a)) - colength(a);
}

/// m-adic order: smallest term degree among the generators.
template <Field F>
int ideal_order(const IdealHandle<F>& a) {
  int best = -1;
  for (const auto& g : a.generators()) {
    if (g.is_zero()) continue;
    int d = static_cast<int>(g.min_degree());
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw ZeroIdeal("order of the zero ideal is undefined");
  return best;
}

/// A subset of the given generators whose images form a basis of I/𝔪I,
/// chosen greedily in generator order.
template <Field F>
std::vector<Polynomial<F>> minimal_generators(const IdealHandle<F>& a) {
  IdealHandle<F> mi = ideal_product(maximal_ideal<F>(a.field()), a);
  auto gb = mi.basis();
  EchelonBasis<F> span;
  std::vector<Polynomial<F>> out;
  for (const auto& g : a.generators()) {
    if (g.is_zero()) continue;
    if (span.insert(normal_form(g, *gb))) out.push_back(g);
  }
  return out;
}

/// Localized containment at the origin: B_𝔪 ⊆ A_𝔪 iff B ⊆ A + 𝔪B (Nakayama;
/// at every other maximal ideal 𝔪B = B).
template <Field F>
bool locally_contains(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  return ideal_subset(b, ideal_sum(a, ideal_product(maximal_ideal<F>(a.field()), b)));
}

template <Field F>
bool locally_equal(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  return locally_contains(a, b) && locally_contains(b, a);
}

/// 𝔪I : ℓ == I.
template <Field F>
bool is_m_full(const IdealHandle<F>& a, const Polynomial<F>& ell) {
  return ideal_equal(ideal_colon_element(ideal_product(maximal_ideal<F>(a.field()), a), ell), a);
}

}  // namespace agrees
