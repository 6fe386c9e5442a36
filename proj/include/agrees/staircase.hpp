#pragma once

// Exact fast path for monomial ideals of k[x,y]: staircases, lattice-point
// colength, Newton-polygon integral closure and contractedness.

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agrees/ideal.hpp"

namespace agrees {

using ExpPair = std::pair<int, int>;

/// Minimal generators x^a y^b of a monomial ideal, a strictly decreasing and
/// b strictly increasing.
class Staircase {
 public:
  Staircase() = default;

  const std::vector<ExpPair>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_m_primary() const noexcept {
    return !gens_.empty() && gens_.front().second == 0 && gens_.back().first == 0;
  }
  /// Exponent of the pure x-power (requires m-primary).
  int x_power() const { return gens_.front().first; }
  int y_power() const { return gens_.back().second; }

  int order() const {
    int o = INT_MAX;
    for (auto [a, b] : gens_) o = std::min(o, a + b);
    return o;
  }

  bool contains(int a, int b) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExpPair& g) { return g.first <= a && g.second <= b; });
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i != 0) out += ", ";
      out += Monomial::xy(gens_[i].first, gens_[i].second).to_string();
    }
    return out + ")";
  }

  friend bool operator==(const Staircase&, const Staircase&) = default;

  static Staircase from_sorted(std::vector<ExpPair> gens) {
    Staircase s;
    s.gens_ = std::move(gens);
    return s;
  }

 private:
  std::vector<ExpPair> gens_;
};

inline Staircase staircase_normalize(std::vector<ExpPair> pairs) {
  if (pairs.empty()) throw EmptyInput("staircase_normalize: no exponent pairs");
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0) throw Error("staircase_normalize: negative exponent");
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<ExpPair> kept;
  int min_b = INT_MAX;
  for (auto p : pairs) {
    if (p.second < min_b) {
      kept.push_back(p);
      min_b = p.second;
    }
  }
  std::reverse(kept.begin(), kept.end());
  return Staircase::from_sorted(std::move(kept));
}

inline void require_m_primary(const Staircase& s, const char* what) {
  if (!s.is_m_primary()) throw NotZeroDimensional(std::string(what) + ": staircase " + s.to_string() + " is not m-primary");
}

/// Lattice points under the staircase.
inline long mono_colength(const Staircase& s) {
  require_m_primary(s, "mono_colength");
  long count = 0;
  const auto& g = s.gens();
  for (std::size_t i = 1; i < g.size(); ++i) {
    count += static_cast<long>(g[i - 1].first) * (g[i].second - g[i - 1].second);
  }
  return count;
}

inline Staircase staircase_product(const Staircase& s, const Staircase& t) {
  std::vector<ExpPair> out;
  for (auto [a, b] : s.gens()) {
    for (auto [c, d] : t.gens()) out.emplace_back(a + c, b + d);
  }
  return staircase_normalize(std::move(out));
}

inline Staircase staircase_power(const Staircase& s, int k) {
  Staircase r = staircase_normalize({{0, 0}});
  for (int i = 0; i < k; ++i) r = staircase_product(r, s);
  return r;
}

inline Staircase staircase_intersection(const Staircase& s, const Staircase& t) {
  std::vector<ExpPair> out;
  for (auto [a, b] : s.gens()) {
    for (auto [c, d] : t.gens()) out.emplace_back(std::max(a, c), std::max(b, d));
  }
  return staircase_normalize(std::move(out));
}

/// S : T.
inline Staircase staircase_colon(const Staircase& s, const Staircase& t) {
  std::optional<Staircase> acc;
  for (auto [c, d] : t.gens()) {
    std::vector<ExpPair> q;
    for (auto [a, b] : s.gens()) q.emplace_back(std::max(a - c, 0), std::max(b - d, 0));
    Staircase piece = staircase_normalize(std::move(q));
    acc = acc ? staircase_intersection(*acc, piece) : piece;
  }
  if (!acc) throw EmptyInput("staircase_colon: empty divisor");
  return *acc;
}

/// Vertices of the lower boundary of the Newton polygon, left to right, from
/// (0, y_power) to (x_power, 0).
class NewtonPolygon {
 public:
  explicit NewtonPolygon(const Staircase& s) {
    require_m_primary(s, "NewtonPolygon");
    std::vector<ExpPair> pts(s.gens().rbegin(), s.gens().rend());
    for (const auto& p : pts) {
      while (vertices_.size() >= 2 && cross(vertices_[vertices_.size() - 2], vertices_.back(), p) <= 0) {
        vertices_.pop_back();
      }
      vertices_.push_back(p);
    }
  }

  const std::vector<ExpPair>& vertices() const noexcept { return vertices_; }

  /// (a, b) lies on or above every lower edge.
  bool contains(int a, int b) const {
    if (a < 0 || b < 0) return false;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      if (cross(vertices_[i - 1], vertices_[i], {a, b}) < 0) return false;
    }
    return true;
  }

 private:
  static long cross(const ExpPair& o, const ExpPair& p, const ExpPair& q) {
    return static_cast<long>(p.first - o.first) * (q.second - o.second) -
           static_cast<long>(p.second - o.second) * (q.first - o.first);
  }

  std::vector<ExpPair> vertices_;
};

/// Integral closure of a monomial ideal: lattice points of the Newton polyhedron.
inline Staircase newton_closure(const Staircase& s) {
  NewtonPolygon hull(s);
  std::vector<ExpPair> pts;
  for (int a = 0; a <= s.x_power(); ++a) {
    for (int b = 0; b <= s.y_power(); ++b) {
      if (hull.contains(a, b)) {
        pts.emplace_back(a, b);
        break;
      }
    }
  }
  return staircase_normalize(std::move(pts));
}

inline bool is_contracted(const Staircase& s) {
  require_m_primary(s, "is_contracted");
  return static_cast<int>(s.size()) == s.order() + 1;
}

/// ℓ(Ī/I).
inline long closure_gap_length(const Staircase& s) { return mono_colength(s) - mono_colength(newton_closure(s)); }

/// Rows are y-exponents from y_power down to 0; '#' marks monomials in the ideal.
inline std::string render_staircase(const Staircase& s) {
  require_m_primary(s, "render_staircase");
  std::string out;
  for (int b = s.y_power(); b >= 0; --b) {
    for (int a = 0; a <= s.x_power(); ++a) out += s.contains(a, b) ? '#' : '.';
    out += '\n';
  }
  return out;
}

/// Staircase of an ideal whose generators are all monomials.
template <Field F>
std::optional<Staircase> staircase_of(const IdealHandle<F>& ideal) {
  if (!(ideal.ring() == Ring::base()) || !ideal.all_monomial()) return std::nullopt;
  std::vector<ExpPair> pairs;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    const Monomial& m = g.leading_monomial();
    pairs.emplace_back(m.exponent(Ring::kX), m.exponent(Ring::kY));
  }
  if (pairs.empty()) return std::nullopt;
  return staircase_normalize(std::move(pairs));
}

template <Field F>
IdealHandle<F> to_ideal(const Staircase& s, const FieldConfig& cfg = {}) {
  return monomial_ideal<F>(s.gens(), cfg);
}

/// Contractedness for arbitrary m-primary ideals: μ(I) = o(I) + 1.
template <Field F>
bool is_contracted(const IdealHandle<F>& ideal) {
  if (auto s = staircase_of(ideal)) return is_contracted(*s);
  if (!is_m_primary(ideal)) throw NotZeroDimensional("is_contracted: ideal is not m-primary");
  return min_gens(ideal) == ideal_order(ideal) + 1;
}

}  // namespace agrees
