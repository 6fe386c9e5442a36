#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

#include "agrees/errors.hpp"

namespace agrees {

inline constexpr int kMaxVars = 16;

enum class RingTag : std::uint8_t { Base, Rees };

/// Variable layout. Base ring: x, y. Extended ring: x, y, t, T1..Ts.
/// x and y occupy indices 0 and 1 in both, so base monomials embed by copy.
struct Ring {
  RingTag tag = RingTag::Base;
  std::uint8_t s = 0;

  static constexpr Ring base() { return {}; }
  static Ring rees(int s) {
    if (s < 0 || s + 3 > kMaxVars) throw Error("extended ring supports at most " + std::to_string(kMaxVars - 3) + " T variables");
    return {RingTag::Rees, static_cast<std::uint8_t>(s)};
  }

  constexpr int arity() const noexcept { return tag == RingTag::Base ? 2 : 3 + s; }
  static constexpr int kX = 0;
  static constexpr int kY = 1;
  static constexpr int kT = 2;
  /// Index of T_i, 1-based as in the grammar.
  static constexpr int big_t(int i) noexcept { return 2 + i; }

  std::string var_name(int i) const {
    switch (i) {
      case 0: return "x";
      case 1: return "y";
      case 2: return "t";
      default: return "T" + std::to_string(i - 2);
    }
  }

  friend constexpr bool operator==(const Ring&, const Ring&) = default;
};

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(Ring ring) : ring_(ring) {}
  Monomial(Ring ring, std::initializer_list<int> exps) : ring_(ring) {
    if (static_cast<int>(exps.size()) != ring.arity()) throw RingMismatch("exponent count does not match ring arity");
    int i = 0;
    for (int e : exps) set(i++, e);
  }

  static Monomial xy(int a, int b) { return Monomial(Ring::base(), {a, b}); }

  Ring ring() const noexcept { return ring_; }
  int arity() const noexcept { return ring_.arity(); }
  int exponent(int i) const noexcept { return exp_[static_cast<std::size_t>(i)]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(int i, int e) {
    if (e < 0 || e > 0xFFFF) throw Error("exponent out of range");
    degree_ = degree_ - exp_[static_cast<std::size_t>(i)] + static_cast<std::uint32_t>(e);
    exp_[static_cast<std::size_t>(i)] = static_cast<Exponent>(e);
  }

  bool divides(const Monomial& o) const noexcept {
    if (degree_ > o.degree_) return false;
    for (int i = 0; i < arity(); ++i) {
      if (exp_[i] > o.exp_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& o) const noexcept {
    for (int i = 0; i < arity(); ++i) {
      if (exp_[i] != 0 && o.exp_[i] != 0) return false;
    }
    return true;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(ring_);
    for (int i = 0; i < arity(); ++i) r.set(i, std::max(exp_[i], o.exp_[i]));
    return r;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.ring_);
    for (int i = 0; i < a.arity(); ++i) r.set(i, a.exp_[i] + b.exp_[i]);
    return r;
  }

  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.ring_);
    for (int i = 0; i < a.arity(); ++i) r.set(i, a.exp_[i] - b.exp_[i]);
    return r;
  }

  /// Total degree restricted to the variables in `mask` (bit i = variable i).
  std::uint32_t degree_in(std::uint32_t mask) const noexcept {
    std::uint32_t d = 0;
    for (int i = 0; i < arity(); ++i) {
      if ((mask >> i) & 1U) d += exp_[i];
    }
    return d;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < arity(); ++i) {
      if (exp_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += ring_.var_name(i);
      if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.ring_ == b.ring_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int i = 0; i < arity(); ++i) h = (h ^ exp_[i]) * 1099511628211ULL;
    return h;
  }

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  Ring ring_{};
};

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

/// Monomial orders: grevlex and lex with x > y > t > T1 > ..., and block
/// elimination orders that compare the front variables first (grevlex on the
/// front block) and break ties with the back order on the remaining variables.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Grevlex, Lex, Block };

  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0, Kind::Grevlex); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, Kind::Lex); }
  static MonomialOrder block(std::uint32_t front_mask, Kind back = Kind::Grevlex) {
    if (back == Kind::Block) throw Error("block order back part must be grevlex or lex");
    return MonomialOrder(Kind::Block, front_mask, back);
  }
  /// Eliminates t from the extended ring.
  static MonomialOrder eliminate_t() { return block(1U << Ring::kT); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint32_t front_mask() const noexcept { return front_; }
  constexpr Kind back() const noexcept { return back_; }

  /// No ring check; hot path for polynomial arithmetic.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    const int n = a.arity();
    switch (kind_) {
      case Kind::Grevlex: return grevlex_cmp(a, b, n, ~0U);
      case Kind::Lex: return lex_cmp(a, b, n, ~0U);
      case Kind::Block: {
        int c = grevlex_cmp(a, b, n, front_);
        if (c != 0) return c;
        return back_ == Kind::Grevlex ? grevlex_cmp(a, b, n, ~front_) : lex_cmp(a, b, n, ~front_);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Block: return "block(" + std::to_string(front_) + "," + (back_ == Kind::Grevlex ? "grevlex" : "lex") + ")";
    }
    return "?";
  }

  friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend constexpr bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.front_ != b.front_) return a.front_ < b.front_;
    return a.back_ < b.back_;
  }

 private:
  constexpr MonomialOrder(Kind k, std::uint32_t front, Kind back) : kind_(k), back_(back), front_(front) {}

  static int grevlex_cmp(const Monomial& a, const Monomial& b, int n, std::uint32_t mask) noexcept {
    std::uint32_t da = a.degree_in(mask);
    std::uint32_t db = b.degree_in(mask);
    if (da != db) return da < db ? -1 : 1;
    for (int i = n - 1; i >= 0; --i) {
      if (((mask >> i) & 1U) == 0) continue;
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
  }

  static int lex_cmp(const Monomial& a, const Monomial& b, int n, std::uint32_t mask) noexcept {
    for (int i = 0; i < n; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  Kind back_;
  std::uint32_t front_;
};

inline Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (!(a.ring() == b.ring())) throw RingMismatch("monomials from different rings");
  int c = order.compare(a, b);
  return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
}

}  // namespace agrees

template <>
struct std::hash<agrees::Monomial> {
  std::size_t operator()(const agrees::Monomial& m) const noexcept { return m.hash(); }
};
