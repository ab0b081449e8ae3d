#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dendrix/dendriform.hpp"
#include "dendrix/errors.hpp"

namespace dendrix {

// Truncated power series in λ over the augmented algebra, coefficients 0..order.
template <Dendriform A>
class Series {
 public:
  using Element = typename A::Element;
  using Coefficient = Augmented<Element>;

  Series(A algebra, int order) : alg_(std::move(algebra)), order_(order) {
    if (order < 0) throw OrderMismatch("negative truncation order");
    coeffs_.assign(order + 1, Coefficient{Rational(0), alg_.zero()});
  }

  static Series one(A algebra, int order) { return constant(std::move(algebra), order, Rational(1)); }

  static Series constant(A algebra, int order, const Rational& unit) {
    Series s(std::move(algebra), order);
    s.coeffs_[0].unit = unit;
    return s;
  }

  // body·λ^power, dropped if power exceeds the order.
  static Series monomial(A algebra, int order, int power, Element body) {
    Series s(std::move(algebra), order);
    if (power <= order) s.coeffs_[power].body = std::move(body);
    return s;
  }

  const A& algebra() const { return alg_; }
  int order() const { return order_; }
  const Coefficient& operator[](int k) const { return coeffs_.at(k); }
  Coefficient& operator[](int k) { return coeffs_.at(k); }
  const std::vector<Coefficient>& coefficients() const { return coeffs_; }

  // Index of the first nonzero coefficient, order()+1 for the zero series.
  int lowest_order() const {
    for (int k = 0; k <= order_; ++k)
      if (!is_zero(coeffs_[k])) return k;
    return order_ + 1;
  }

  Series truncated(int order) const {
    Series s(alg_, order);
    for (int k = 0; k <= std::min(order, order_); ++k) s.coeffs_[k] = coeffs_[k];
    return s;
  }

  friend bool operator==(const Series& s, const Series& t) {
    return s.order_ == t.order_ && s.alg_ == t.alg_ && s.coeffs_ == t.coeffs_;
  }

  friend Series operator+(const Series& s, const Series& t) {
    require_compatible(s, t);
    Series r = s;
    for (int k = 0; k <= r.order_; ++k) r.coeffs_[k] = s.coeffs_[k] + t.coeffs_[k];
    return r;
  }
  friend Series operator-(const Series& s, const Series& t) {
    require_compatible(s, t);
    Series r = s;
    for (int k = 0; k <= r.order_; ++k) r.coeffs_[k] = s.coeffs_[k] - t.coeffs_[k];
    return r;
  }
  friend Series operator*(const Rational& c, const Series& s) {
    Series r = s;
    for (auto& x : r.coeffs_) x = c * x;
    return r;
  }
  Series operator-() const { return Rational(-1) * *this; }

  static void require_compatible(const Series& s, const Series& t) {
    if (s.order_ != t.order_) throw OrderMismatch("series orders differ");
    if (!(s.alg_ == t.alg_)) throw AlgebraMismatch("series live in different algebras");
  }

 private:
  A alg_;
  int order_;
  std::vector<Coefficient> coeffs_;
};

template <Dendriform A>
bool is_zero(const Series<A>& s) {
  return s.lowest_order() > s.order();
}

// Multiply by λ^k, truncating.
template <Dendriform A>
Series<A> shift(const Series<A>& s, int k) {
  Series<A> r(s.algebra(), s.order());
  for (int i = 0; i + k <= s.order(); ++i) r[i + k] = s[i];
  return r;
}

template <Dendriform A>
std::optional<int> first_difference(const Series<A>& s, const Series<A>& t) {
  Series<A>::require_compatible(s, t);
  for (int k = 0; k <= s.order(); ++k)
    if (!(s[k] == t[k])) return k;
  return std::nullopt;
}

namespace detail {

template <Dendriform A, class Product>
Series<A> cauchy(const Series<A>& s, const Series<A>& t, Product product) {
  Series<A>::require_compatible(s, t);
  const A& alg = s.algebra();
  const int n = s.order();
  Series<A> r(alg, n);
  std::vector<bool> s_nz(n + 1), t_nz(n + 1);
  for (int k = 0; k <= n; ++k) {
    s_nz[k] = !is_zero(s[k]);
    t_nz[k] = !is_zero(t[k]);
  }
  for (int i = 0; i <= n; ++i) {
    if (!s_nz[i]) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!t_nz[j]) continue;
      r[i + j] = r[i + j] + product(alg, s[i], t[j]);
    }
  }
  return r;
}

}  // namespace detail

template <Dendriform A>
Series<A> series_prec(const Series<A>& s, const Series<A>& t) {
  return detail::cauchy(s, t, [](const A& a, const auto& x, const auto& y) { return dend_prec(a, x, y); });
}

template <Dendriform A>
Series<A> series_succ(const Series<A>& s, const Series<A>& t) {
  return detail::cauchy(s, t, [](const A& a, const auto& x, const auto& y) { return dend_succ(a, x, y); });
}

template <Dendriform A>
Series<A> series_star(const Series<A>& s, const Series<A>& t) {
  return detail::cauchy(s, t, [](const A& a, const auto& x, const auto& y) { return star(a, x, y); });
}

template <Dendriform A>
Series<A> series_prelie_left(const Series<A>& s, const Series<A>& t) {
  return series_succ(s, t) - series_prec(t, s);
}

template <Dendriform A>
Series<A> series_prelie_right(const Series<A>& s, const Series<A>& t) {
  return series_prec(s, t) - series_succ(t, s);
}

template <Dendriform A>
Series<A> series_exp(const Series<A>& s) {
  if (!is_zero(s[0])) throw BadConstantTerm("exp* needs a series without constant term");
  Series<A> result = Series<A>::one(s.algebra(), s.order());
  Series<A> power = result;
  for (int n = 1; n <= s.order(); ++n) {
    power = Rational(1, n) * series_star(power, s);
    if (is_zero(power)) break;
    result = result + power;
  }
  return result;
}

template <Dendriform A>
Series<A> series_log(const Series<A>& s) {
  if (!(s[0].unit == Rational(1)) || !is_zero(s[0].body))
    throw BadConstantTerm("log* needs constant term exactly 1");
  Series<A> x = s - Series<A>::one(s.algebra(), s.order());
  Series<A> result(s.algebra(), s.order());
  Series<A> power = x;
  for (int n = 1; n <= s.order(); ++n) {
    if (is_zero(power)) break;
    result = result + Rational(n % 2 ? 1 : -1, n) * power;
    power = series_star(power, x);
  }
  return result;
}

// Neumann series: (u(1 + y))⁻¹ = u⁻¹ Σ (−y)ⁿ.
template <Dendriform A>
Series<A> series_inverse(const Series<A>& s) {
  const Rational u = s[0].unit;
  if (u.is_zero() || !is_zero(s[0].body)) throw BadConstantTerm("inverse needs an invertible unit constant term");
  const Rational inv = Rational(1) / u;
  Series<A> y = inv * s - Series<A>::one(s.algebra(), s.order());
  Series<A> neg_y = -y;
  Series<A> result = Series<A>::one(s.algebra(), s.order());
  Series<A> power = result;
  for (int n = 1; n <= s.order(); ++n) {
    power = series_star(power, neg_y);
    if (is_zero(power)) break;
    result = result + power;
  }
  return inv * result;
}

enum class Side { prec, succ };
enum class PreLieSide { left, right };

// ≻: ((x₁≻x₂)≻…)≻xₙ ; ≺: x₁≺(x₂≺(…≺xₙ)) ; empty list gives 1.
template <Dendriform A>
AugmentedOf<A> word_iterate(const A& alg, Side side, const std::vector<AugmentedOf<A>>& xs) {
  if (xs.empty()) return unit_of(alg);
  if (side == Side::succ) {
    AugmentedOf<A> acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = dend_succ(alg, acc, xs[i]);
    return acc;
  }
  AugmentedOf<A> acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = dend_prec(alg, xs[i], acc);
  return acc;
}

// left: ((x₁⊳x₂)⊳…)⊳xₙ ; right: x₁⊲(x₂⊲(…⊲xₙ)).
template <Dendriform A>
AugmentedOf<A> prelie_iterate(const A& alg, PreLieSide side, const std::vector<AugmentedOf<A>>& xs) {
  if (xs.empty()) throw std::invalid_argument("pre-Lie iterate needs at least one element");
  if (side == PreLieSide::left) {
    AugmentedOf<A> acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = prelie_left(alg, acc, xs[i]);
    return acc;
  }
  AugmentedOf<A> acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = prelie_right(alg, xs[i], acc);
  return acc;
}

// x₁⊳(x₂⊳(…⊳xₙ))
template <Dendriform A>
AugmentedOf<A> prelie_left_nested(const A& alg, const std::vector<AugmentedOf<A>>& xs) {
  if (xs.empty()) throw std::invalid_argument("pre-Lie iterate needs at least one element");
  AugmentedOf<A> acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = prelie_left(alg, xs[i], acc);
  return acc;
}

// B_n with B₁ = −1/2.
Rational bernoulli(int n);

}  // namespace dendrix
