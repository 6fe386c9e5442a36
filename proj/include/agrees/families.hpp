#pragma once

// Named parameter families of monomial ideals.

#include <map>
#include <string>
#include <vector>

#include "agrees/staircase.hpp"

namespace agrees {

using FamilyParams = std::map<std::string, int>;

struct FamilyInfo {
  std::string name;
  /// Parameter names in enumeration order.
  std::vector<std::string> params;
};

inline const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog{
      {"contracted-o3", {"n", "alpha", "beta"}},
      {"power-order", {"m", "n"}},
      {"three-gen", {"n", "alpha"}},
      {"remark43", {"m"}},
      {"products", {"m", "n", "alpha", "beta"}},
  };
  return catalog;
}

inline const FamilyInfo& family_info(const std::string& name) {
  for (const auto& f : family_catalog()) {
    if (f.name == name) return f;
  }
  throw BadParameters("unknown family '" + name + "'");
}

namespace detail {

inline int param(const FamilyParams& p, const std::string& family, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw BadParameters(family + ": missing parameter " + key);
  return it->second;
}

inline void require(bool ok, const std::string& family, const std::string& constraint) {
  if (!ok) throw BadParameters(family + ": constraint " + constraint + " violated");
}

inline std::vector<ExpPair> power_order_exps(int m, int n, const std::string& family) {
  require(2 <= m && m <= n, family, "2 <= m <= n");
  // (x^m) + y^{n-m+1} 𝔪^{m-1}
  std::vector<ExpPair> e{{m, 0}};
  for (int k = 0; k < m; ++k) e.emplace_back(m - 1 - k, n - m + 1 + k);
  return e;
}

}  // namespace detail

/// Generators in the customary display order; errors with BadParameters.
///   contracted-o3(n, alpha, beta): (x^3, x^2 y^alpha, x y^beta, y^n), 0 < alpha < beta < n
///   power-order(m, n):             (x^m) + y^{n-m+1} m^{m-1}, 2 <= m <= n
///   three-gen(n, alpha):           (x^3, x^2 y^alpha, y^n), 0 < alpha < n, 2 alpha >= n
///   remark43(m):                   (x^m, y^{2m}) + (x^{m-i} y^{2i+1} | 1 <= i < m), m >= 4
///   products(m, n, alpha, beta):   power-order(m, n) * power-order(alpha, beta)
template <Field F = Rational>
IdealHandle<F> make_family(const std::string& name, const FamilyParams& p, const FieldConfig& cfg = {}) {
  using detail::param;
  using detail::require;
  std::vector<ExpPair> e;
  if (name == "contracted-o3") {
    const int n = param(p, name, "n"), a = param(p, name, "alpha"), b = param(p, name, "beta");
    require(0 < a && a < b && b < n, name, "0 < alpha < beta < n");
    e = {{3, 0}, {2, a}, {1, b}, {0, n}};
  } else if (name == "power-order") {
    e = detail::power_order_exps(param(p, name, "m"), param(p, name, "n"), name);
  } else if (name == "three-gen") {
    const int a = param(p, name, "alpha"), n = param(p, name, "n");
    require(0 < a && a < n, name, "0 < alpha < n");
    require(2 * a >= n, name, "2 alpha >= n");
    e = {{3, 0}, {2, a}, {0, n}};
  } else if (name == "remark43") {
    const int m = param(p, name, "m");
    require(m >= 4, name, "m >= 4");
    e = {{m, 0}, {0, 2 * m}};
    for (int i = 1; i < m; ++i) e.emplace_back(m - i, 2 * i + 1);
  } else if (name == "products") {
    Staircase a = staircase_normalize(detail::power_order_exps(param(p, name, "m"), param(p, name, "n"), name));
    Staircase b =
        staircase_normalize(detail::power_order_exps(param(p, name, "alpha"), param(p, name, "beta"), name));
    e = staircase_product(a, b).gens();
  } else {
    throw BadParameters("unknown family '" + name + "'");
  }
  return monomial_ideal<F>(e, cfg);
}

}  // namespace agrees
