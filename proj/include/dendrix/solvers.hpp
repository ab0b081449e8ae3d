#pragma once

#include <cstddef>
#include <vector>

#include "dendrix/dendriform.hpp"
#include "dendrix/matrix_dend.hpp"
#include "dendrix/series.hpp"

namespace dendrix {

template <Dendriform A>
Series<A> constant_series(const A& alg, int order, const AugmentedOf<A>& x) {
  Series<A> s(alg, order);
  s[0] = x;
  return s;
}

// Applies map order+1 times starting from zero. For an equation X = a + λ·L(X)
// with L linear this is exact through the truncation order.
template <Dendriform A, class Map>
Series<A> fixed_point(const A& alg, int order, Map map) {
  Series<A> x(alg, order);
  for (int pass = 0; pass <= order; ++pass) x = map(x);
  return x;
}

// Y = 1 + λ a≺Y, Y_k = a≺Y_{k−1}
template <Dendriform A>
Series<A> solve_01(const A& alg, const AugmentedOf<A>& a, int order) {
  Series<A> y = Series<A>::one(alg, order);
  for (int k = 1; k <= order; ++k) y[k] = dend_prec(alg, a, y[k - 1]);
  return y;
}

// Z = 1 + λ Z≻b, Z_k = Z_{k−1}≻b
template <Dendriform A>
Series<A> solve_10(const A& alg, const AugmentedOf<A>& b, int order) {
  Series<A> z = Series<A>::one(alg, order);
  for (int k = 1; k <= order; ++k) z[k] = dend_succ(alg, z[k - 1], b);
  return z;
}

enum class EFVariant { E, F };

// E = head + λ tail≺E  resp.  F = head + λ F≻tail.
// E = u·Y + Y★(Y⁻¹≻A) with Y = solve_01(tail), Y⁻¹ = solve_10(−tail);
// F = u·Z + (A≺Z⁻¹)★Z with Z = solve_10(tail), Z⁻¹ = solve_01(−tail);
// where head = u·1 + A.
template <Dendriform A>
Series<A> solve_EF(const A& alg, EFVariant variant, const AugmentedOf<A>& head, const AugmentedOf<A>& tail,
                   int order) {
  const Series<A> body = constant_series(alg, order, embed(alg, head.body));
  if (variant == EFVariant::E) {
    const Series<A> y = solve_01(alg, tail, order);
    const Series<A> y_inv = solve_10(alg, -tail, order);
    return head.unit * y + series_star(y, series_succ(y_inv, body));
  }
  const Series<A> z = solve_10(alg, tail, order);
  const Series<A> z_inv = solve_01(alg, -tail, order);
  return head.unit * z + series_star(series_prec(body, z_inv), z);
}

// X = a + λX≻b + λc≺X, solved as X = u·Y★Z + Y★(Y⁻¹≻A≺Z⁻¹)★Z.
template <Dendriform A>
Series<A> solve_11(const A& alg, const AugmentedOf<A>& a, const AugmentedOf<A>& b, const AugmentedOf<A>& c,
                   int order) {
  const Series<A> y = solve_01(alg, c, order);
  const Series<A> y_inv = solve_10(alg, -c, order);
  const Series<A> z = solve_10(alg, b, order);
  const Series<A> z_inv = solve_01(alg, -b, order);
  const Series<A> body = constant_series(alg, order, embed(alg, a.body));
  const Series<A> middle = series_prec(series_succ(y_inv, body), z_inv);
  const Series<A> yz = series_star(y, z);
  Series<A> x = series_star(series_star(y, middle), z);
  if (!a.unit.is_zero()) x = x + a.unit * yz;
  return x;
}

// X = a + λX⊳b
template <Dendriform A>
Series<A> solve_prelie(const A& alg, const AugmentedOf<A>& a, const AugmentedOf<A>& b, int order) {
  return solve_11(alg, a, b, -b, order);
}

// Right-hand sides of the defining equations; residual = rhs(X) − X.
template <Dendriform A>
Series<A> rhs_11(const Series<A>& x, const AugmentedOf<A>& a, const AugmentedOf<A>& b, const AugmentedOf<A>& c) {
  const A& alg = x.algebra();
  const int n = x.order();
  return constant_series(alg, n, a) + shift(series_succ(x, constant_series(alg, n, b)), 1) +
         shift(series_prec(constant_series(alg, n, c), x), 1);
}

template <Dendriform A>
Series<A> rhs_EF(EFVariant variant, const Series<A>& x, const AugmentedOf<A>& head, const AugmentedOf<A>& tail) {
  const A& alg = x.algebra();
  const Series<A> t = constant_series(alg, x.order(), tail);
  const Series<A> h = constant_series(alg, x.order(), head);
  return variant == EFVariant::E ? h + shift(series_prec(t, x), 1) : h + shift(series_succ(x, t), 1);
}

template <Dendriform A>
Series<A> rhs_prelie(const Series<A>& x, const AugmentedOf<A>& a, const AugmentedOf<A>& b) {
  const A& alg = x.algebra();
  return constant_series(alg, x.order(), a) + shift(series_prelie_left(x, constant_series(alg, x.order(), b)), 1);
}

template <Dendriform A>
Series<A> solve_11_by_iteration(const A& alg, const AugmentedOf<A>& a, const AugmentedOf<A>& b,
                                const AugmentedOf<A>& c, int order) {
  return fixed_point(alg, order, [&](const Series<A>& x) { return rhs_11(x, a, b, c); });
}

template <Dendriform A>
Series<A> solve_EF_by_iteration(const A& alg, EFVariant variant, const AugmentedOf<A>& head,
                                const AugmentedOf<A>& tail, int order) {
  return fixed_point(alg, order, [&](const Series<A>& x) { return rhs_EF(variant, x, head, tail); });
}

// Θ_Z(x) = Z≻x≺Z⁻¹
template <Dendriform A>
Series<A> theta_action(const Series<A>& z, const Series<A>& x) {
  return series_prec(series_succ(z, x), series_inverse(z));
}

// Ad*_F(G) = F★G★F⁻¹
template <Dendriform A>
Series<A> ad_action(const Series<A>& f, const Series<A>& g) {
  return series_star(series_star(f, g), series_inverse(f));
}

// Σ_{k<n} (−1)^k (n−k) w≺^{(k)}(x) ★ w≻^{(n−k)}(x)
template <Dendriform A>
AugmentedOf<A> dynkin(const A& alg, int n, const AugmentedOf<A>& x) {
  if (n < 1) throw std::invalid_argument("dynkin needs n >= 1");
  std::vector<AugmentedOf<A>> left{unit_of(alg)}, right{unit_of(alg)};
  for (int k = 1; k <= n; ++k) {
    left.push_back(dend_prec(alg, x, left.back()));
    right.push_back(k == 1 ? x : dend_succ(alg, right.back(), x));
  }
  AugmentedOf<A> acc = embed(alg, alg.zero());
  for (int k = 0; k < n; ++k) {
    const Rational coeff = Rational(k % 2 ? -(n - k) : (n - k));
    acc = acc + coeff * star(alg, left[k], right[n - k]);
  }
  return acc;
}

// λ d/dλ
template <Dendriform A>
Series<A> grading(const Series<A>& s) {
  Series<A> r = s;
  for (int k = 0; k <= s.order(); ++k) r[k] = Rational(k) * s[k];
  return r;
}

// D(Z) = Z⁻¹ ★ λ dZ/dλ, the Dynkin operator S⋆N on a group-like series.
template <Dendriform A>
Series<A> dynkin_series(const Series<A>& z) {
  return series_star(series_inverse(z), grading(z));
}

// Drops the λ⁰ coefficient and divides by λ; the result has order one less.
template <Dendriform A>
Series<A> divide_by_lambda(const Series<A>& s) {
  if (!is_zero(s[0])) throw BadConstantTerm("series is not divisible by λ");
  Series<A> r(s.algebra(), s.order() - 1);
  for (int k = 1; k <= s.order(); ++k) r[k - 1] = s[k];
  return r;
}

// X = a00 + Σ_q λ^q ω≻(X, b_q1..b_qq) + Σ_p λ^p ω≺(c_p1..c_pp, X)
template <Dendriform A>
struct EquationSpec {
  int m = 0;
  int n = 0;
  AugmentedOf<A> a00;
  std::vector<std::vector<typename A::Element>> b;  // b[q-1] holds b_q1..b_qq
  std::vector<std::vector<typename A::Element>> c;  // c[p-1] holds c_p1..c_pp

  void validate() const {
    if (m < 0 || n < 0) throw ShapeError("negative equation degree");
    if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n)
      throw ShapeError("coefficient table does not match the equation degree");
    for (int q = 1; q <= m; ++q)
      if (static_cast<int>(b[q - 1].size()) != q) throw ShapeError("row b_" + std::to_string(q) + " must have q entries");
    for (int p = 1; p <= n; ++p)
      if (static_cast<int>(c[p - 1].size()) != p) throw ShapeError("row c_" + std::to_string(p) + " must have p entries");
  }
};

template <Dendriform A>
Series<A> rhs_equation(const EquationSpec<A>& spec, const Series<A>& x) {
  const A& alg = x.algebra();
  const int order = x.order();
  Series<A> r = constant_series(alg, order, spec.a00);
  for (int q = 1; q <= spec.m && q <= order; ++q) {
    Series<A> word = x;
    for (const auto& coeff : spec.b[q - 1]) word = series_succ(word, constant_series(alg, order, embed(alg, coeff)));
    r = r + shift(word, q);
  }
  for (int p = 1; p <= spec.n && p <= order; ++p) {
    Series<A> word = x;
    const auto& row = spec.c[p - 1];
    for (auto it = row.rbegin(); it != row.rend(); ++it)
      word = series_prec(constant_series(alg, order, embed(alg, *it)), word);
    r = r + shift(word, p);
  }
  return r;
}

template <Dendriform A>
Series<A> solve_equation_by_iteration(const A& alg, const EquationSpec<A>& spec, int order) {
  spec.validate();
  return fixed_point(alg, order, [&](const Series<A>& x) { return rhs_equation(spec, x); });
}

inline std::size_t embedding_size(int m) { return 1 + static_cast<std::size_t>(m) * (m - 1) / 2; }

// Position of λ^j ω≻^{(j+1)}(X, b_q1..b_qj) in the solution row, 1 ≤ j < q.
inline std::size_t embedding_index(int q, int j) { return 1 + static_cast<std::size_t>(q - 1) * (q - 2) / 2 + (j - 1); }

template <Dendriform A>
Matrix<typename A::Element> build_Mm(const A& alg, const EquationSpec<A>& spec) {
  spec.validate();
  if (spec.n != 0 || spec.m < 1) throw ShapeError("build_Mm needs an equation of degree (m,0) with m >= 1");
  const int m = spec.m;
  const std::size_t size = embedding_size(m);
  Matrix<typename A::Element> mat(size, size, alg.zero());
  for (int q = 1; q <= m; ++q) {
    const auto& row = spec.b[q - 1];
    if (q == 1) {
      mat(0, 0) = row[0];
      continue;
    }
    mat(0, embedding_index(q, 1)) = row[0];
    for (int j = 2; j < q; ++j) mat(embedding_index(q, j - 1), embedding_index(q, j)) = row[j - 1];
    mat(embedding_index(q, q - 1), 0) = row[q - 1];
  }
  return mat;
}

// First row of ((a00·1_N) ≺ Z⁻¹) ★ Z with Z = 1_N + λZ≻M_m; entry 0 is X.
template <Dendriform A>
std::vector<Series<A>> solve_m0_row(const A& alg, const EquationSpec<A>& spec, int order) {
  const auto mat_alg = matrix_lift(alg, embedding_size(spec.m));
  const auto m_matrix = build_Mm(alg, spec);
  using MA = MatrixDend<A>;
  const Series<MA> z = solve_10(mat_alg, embed(mat_alg, m_matrix), order);
  Series<MA> x = spec.a00.unit * z;
  if (!is_zero(spec.a00.body)) {
    const Series<MA> head = constant_series(mat_alg, order, diagonal(mat_alg, embed(alg, spec.a00.body)));
    x = x + series_star(series_prec(head, series_inverse(z)), z);
  }
  std::vector<Series<A>> row;
  for (std::size_t j = 0; j < mat_alg.size; ++j) row.push_back(entry(x, 0, j));
  return row;
}

template <Dendriform A>
Series<A> solve_m0(const A& alg, const EquationSpec<A>& spec, int order) {
  return solve_m0_row(alg, spec, order).front();
}

template <Dendriform A, Dendriform B>
Series<B> rebase(const Series<A>& s, const B& alg) {
  Series<B> r(alg, s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = {s[k].unit, s[k].body};
  return r;
}

// Degree (0,n): the (n,0) equation in the opposite algebra, with
// b'_pj = c_{p,p+1−j}.
template <Dendriform A>
Series<A> solve_0n(const A& alg, const EquationSpec<A>& spec, int order) {
  spec.validate();
  if (spec.m != 0 || spec.n < 1) throw ShapeError("solve_0n needs an equation of degree (0,n) with n >= 1");
  Opposite<A> opp{alg};
  EquationSpec<Opposite<A>> flipped;
  flipped.m = spec.n;
  flipped.a00 = {spec.a00.unit, spec.a00.body};
  for (const auto& row : spec.c) flipped.b.emplace_back(row.rbegin(), row.rend());
  return rebase(solve_m0(opp, flipped, order), alg);
}

}  // namespace dendrix
