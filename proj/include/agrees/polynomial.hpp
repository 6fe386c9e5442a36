#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agrees/field.hpp"
#include "agrees/monomial.hpp"

namespace agrees {

template <Field F>
struct Term {
  Monomial mono;
  F coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are kept strictly descending in the polynomial's
/// monomial order with no zero coefficients; the zero polynomial has no terms.
template <Field F>
class Polynomial {
 public:
  using Coeff = F;

  Polynomial() = default;
  explicit Polynomial(Ring ring, MonomialOrder order = MonomialOrder::grevlex()) : ring_(ring), order_(order) {}

  /// Builds from arbitrary terms: sorts, merges like terms, drops zeros.
  Polynomial(Ring ring, MonomialOrder order, std::vector<Term<F>> terms)
      : ring_(ring), order_(order), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial monomial(const Monomial& m, F c, MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(m.ring(), order);
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial constant(Ring ring, F c, MonomialOrder order = MonomialOrder::grevlex()) {
    return monomial(Monomial(ring), std::move(c), order);
  }
  /// Terms must already be strictly descending in `order` with nonzero coefficients.
  static Polynomial from_sorted(Ring ring, MonomialOrder order, std::vector<Term<F>> terms) {
    Polynomial p(ring, order);
    p.terms_ = std::move(terms);
    return p;
  }

  Ring ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term<F>>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term<F>& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const F& leading_coeff() const { return terms_.front().coeff; }

  /// Lowest total degree among terms (the m-adic order of the element).
  std::uint32_t min_degree() const {
    std::uint32_t d = ~0U;
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }
  std::uint32_t max_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  /// Largest exponent of variable i among the terms.
  int max_exponent(int i) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(i));
    return d;
  }

  Polynomial with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    Polynomial r(ring_, order);
    r.terms_ = terms_;
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order.compare(a.mono, b.mono) > 0; });
    return r;
  }

  /// Re-tags into another ring with the same leading variables (x, y first).
  Polynomial in_ring(Ring ring, const MonomialOrder& order) const {
    Polynomial r(ring, order);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(ring);
      for (int i = 0; i < t.mono.arity(); ++i) {
        if (t.mono.exponent(i) == 0) continue;
        if (i >= ring.arity()) throw RingMismatch("variable " + ring_.var_name(i) + " not present in target ring");
        m.set(i, t.mono.exponent(i));
      }
      r.terms_.push_back({m, t.coeff});
    }
    r.normalize();
    return r;
  }

  void pop_leading() { terms_.erase(terms_.begin()); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
  }

  Polynomial scaled(const F& c) const {
    Polynomial r(ring_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  /// c * m * this.
  Polynomial mul_term(const Monomial& m, const F& c) const {
    Polynomial r(ring_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // multiplication by a monomial preserves the order
  }

  /// this - c * m * g, merged in one pass.
  Polynomial sub_mul(const F& c, const Monomial& m, const Polynomial& g) const {
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto it = terms_.begin();
    auto jt = g.terms_.begin();
    while (it != terms_.end() || jt != g.terms_.end()) {
      if (jt == g.terms_.end()) {
        r.terms_.push_back(*it++);
        continue;
      }
      Monomial gm = jt->mono * m;
      if (it == terms_.end()) {
        r.terms_.push_back({gm, -(jt->coeff * c)});
        ++jt;
        continue;
      }
      int cmp = order_.compare(it->mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(*it++);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, -(jt->coeff * c)});
        ++jt;
      } else {
        F v = it->coeff - jt->coeff * c;
        if (!v.is_zero()) r.terms_.push_back({it->mono, std::move(v)});
        ++it;
        ++jt;
      }
    }
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.ring_, a.order_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    while (it != a.terms_.end() && jt != b.terms_.end()) {
      int cmp = a.order_.compare(it->mono, jt->mono);
      if (cmp > 0) {
        r.terms_.push_back(*it++);
      } else if (cmp < 0) {
        r.terms_.push_back(*jt++);
      } else {
        F v = it->coeff + jt->coeff;
        if (!v.is_zero()) r.terms_.push_back({it->mono, std::move(v)});
        ++it;
        ++jt;
      }
    }
    r.terms_.insert(r.terms_.end(), it, a.terms_.end());
    r.terms_.insert(r.terms_.end(), jt, b.terms_.end());
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term<F>> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    return Polynomial(a.ring_, a.order_, std::move(prod));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    if (is_zero() && e > 0) return *this;
    Polynomial r = constant(ring_, one_like(), order_);
    Polynomial b = *this;
    while (e != 0) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e != 0) b *= b;
    }
    return r;
  }

  /// Coefficient of m, if present.
  std::optional<F> coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [&](const Term<F>& t, const Monomial& k) { return order_.compare(t.mono, k) > 0; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return std::nullopt;
  }

  /// Canonical text in the ideal grammar: "x^2*y - 3/2*y^3 + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coeff.to_string();
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        out += c;
      } else {
        if (c != "1") out += c + "*";
        out += t.mono.to_string();
      }
    }
    return out;
  }

  /// Equality of the underlying polynomials (order-independent).
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_)) return false;
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }

  /// The unit of F, taken from an existing coefficient so a prime modulus is kept.
  F one_like() const {
    if (terms_.empty()) throw Error("cannot derive a field unit from the zero polynomial");
    return terms_.front().coeff / terms_.front().coeff;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("polynomials from different rings");
    if (!(order_ == o.order_)) throw Error("polynomials use different monomial orders");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order_.compare(a.mono, b.mono) > 0; });
    std::vector<Term<F>> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!(t.mono.ring() == ring_)) throw RingMismatch("term ring differs from polynomial ring");
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const Term<F>& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
  }

  Ring ring_{};
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Term<F>> terms_;
};

/// Maps every coefficient through `f` (e.g. rationals into a prime field).
template <Field G, Field F, class Fn>
Polynomial<G> map_coefficients(const Polynomial<F>& p, Fn&& f) {
  std::vector<Term<G>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, f(t.coeff)});
  return Polynomial<G>(p.ring(), p.order(), std::move(terms));
}

template <Field F>
Polynomial<F> convert_field(const Polynomial<Rational>& p, const FieldConfig& cfg) {
  return map_coefficients<F>(p, [&](const Rational& q) { return F::from_rational(q, cfg); });
}

/// Evaluates p with variable i replaced by images[i] (all in one target ring).
template <Field F>
Polynomial<F> substitute(const Polynomial<F>& p, std::span<const Polynomial<F>> images) {
  if (static_cast<int>(images.size()) != p.ring().arity()) throw RingMismatch("substitution arity mismatch");
  const Ring target = images.front().ring();
  const MonomialOrder order = images.front().order();
  Polynomial<F> result(target, order);
  for (const auto& t : p.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, t.coeff, order);
    for (int i = 0; i < p.ring().arity(); ++i) {
      if (t.mono.exponent(i) != 0) term *= images[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(t.mono.exponent(i)));
    }
    result += term;
  }
  return result;
}

}  // namespace agrees
