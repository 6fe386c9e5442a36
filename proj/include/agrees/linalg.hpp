#pragma once

#include <span>
#include <vector>

#include "agrees/polynomial.hpp"

namespace agrees {

/// Row-echelon span of polynomials viewed as coefficient vectors over their
/// monomials. Rows have pairwise distinct leading monomials.
template <Field F>
class EchelonBasis {
 public:
  /// Reduces v against the rows; keeps it if it is independent.
  bool insert(Polynomial<F> v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    rows_.push_back(v.monic());
    return true;
  }

  Polynomial<F> reduce(Polynomial<F> v) const {
    std::size_t i = 0;
    while (i < v.size()) {
      const Monomial m = v.terms()[i].mono;
      const Polynomial<F>* pivot = nullptr;
      for (const auto& r : rows_) {
        if (r.leading_monomial() == m) {
          pivot = &r;
          break;
        }
      }
      if (pivot == nullptr) {
        ++i;
        continue;
      }
      // rows only touch monomials <= their pivot, so earlier terms are kept
      v = v.sub_mul(v.terms()[i].coeff, Monomial(m.ring()), *pivot);
    }
    return v;
  }

  bool contains(const Polynomial<F>& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::vector<Polynomial<F>> rows_;
};

template <Field F>
std::size_t rank_of(std::span<const Polynomial<F>> vectors) {
  EchelonBasis<F> b;
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

template <Field F>
std::size_t rank_of(const std::vector<Polynomial<F>>& vectors) {
  return rank_of<F>(std::span<const Polynomial<F>>(vectors));
}

}  // namespace agrees
