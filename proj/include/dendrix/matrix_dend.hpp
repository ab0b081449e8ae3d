#pragma once

#include <cstddef>

#include "dendrix/dendriform.hpp"
#include "dendrix/matrix.hpp"
#include "dendrix/series.hpp"

namespace dendrix {

// N×N matrices over a dendriform algebra: (x≺y)_ij = Σ_k x_ik ≺ y_kj. The
// augmented unit c·1 is c times the identity with dendriform units on the diagonal.
template <Dendriform A>
struct MatrixDend {
  using Element = Matrix<typename A::Element>;
  A base;
  std::size_t size = 1;

  Element zero() const { return Element(size, size, base.zero()); }
  Element prec(const Element& x, const Element& y) const {
    return product(x, y, [&](const auto& u, const auto& v) { return base.prec(u, v); });
  }
  Element succ(const Element& x, const Element& y) const {
    return product(x, y, [&](const auto& u, const auto& v) { return base.succ(u, v); });
  }
  Element star(const Element& x, const Element& y) const {
    return product(x, y, [&](const auto& u, const auto& v) { return star_body(base, u, v); });
  }
  friend bool operator==(const MatrixDend&, const MatrixDend&) = default;

 private:
  template <class Op>
  Element product(const Element& x, const Element& y, Op op) const {
    if (x.rows() != size || y.rows() != size || x.cols() != size || y.cols() != size)
      throw ShapeMismatch("matrix dendriform operands have the wrong size");
    Element r = zero();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t k = 0; k < size; ++k) {
        if (is_zero(x(i, k))) continue;
        for (std::size_t j = 0; j < size; ++j) {
          if (is_zero(y(k, j))) continue;
          r(i, j) = r(i, j) + op(x(i, k), y(k, j));
        }
      }
    return r;
  }
};

template <Dendriform A>
MatrixDend<A> matrix_lift(const A& base, std::size_t size) {
  if (size < 1) throw ShapeError("matrix size must be positive");
  return MatrixDend<A>{base, size};
}

// x·1_N, with the unit part kept as the matrix unit.
template <Dendriform A>
AugmentedOf<MatrixDend<A>> diagonal(const MatrixDend<A>& m, const AugmentedOf<A>& x) {
  auto body = m.zero();
  for (std::size_t i = 0; i < m.size; ++i) body(i, i) = x.body;
  return {x.unit, std::move(body)};
}

template <Dendriform A>
AugmentedOf<A> entry(const MatrixDend<A>& m, const AugmentedOf<MatrixDend<A>>& x, std::size_t i, std::size_t j) {
  if (i >= m.size || j >= m.size) throw ShapeError("matrix entry out of range");
  return {i == j ? x.unit : Rational(0), x.body(i, j)};
}

template <Dendriform A>
Series<A> entry(const Series<MatrixDend<A>>& s, std::size_t i, std::size_t j) {
  const MatrixDend<A>& m = s.algebra();
  Series<A> r(m.base, s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = entry(m, s[k], i, j);
  return r;
}

}  // namespace dendrix
