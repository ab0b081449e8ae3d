#pragma once

#include <concepts>
#include <utility>

#include "dendrix/errors.hpp"
#include "dendrix/rational.hpp"

namespace dendrix {

template <class A>
concept Dendriform = std::equality_comparable<A> &&
    requires(const A& alg, const typename A::Element& x, const Rational& c) {
      { alg.zero() } -> std::convertible_to<typename A::Element>;
      { alg.prec(x, x) } -> std::convertible_to<typename A::Element>;
      { alg.succ(x, x) } -> std::convertible_to<typename A::Element>;
      { x + x } -> std::convertible_to<typename A::Element>;
      { x - x } -> std::convertible_to<typename A::Element>;
      { c * x } -> std::convertible_to<typename A::Element>;
      { is_zero(x) } -> std::convertible_to<bool>;
      { x == x } -> std::convertible_to<bool>;
    };

// unit·1 + body, an element of the augmented algebra.
template <class E>
struct Augmented {
  Rational unit;
  E body;

  friend bool operator==(const Augmented&, const Augmented&) = default;
  friend Augmented operator+(const Augmented& x, const Augmented& y) { return {x.unit + y.unit, x.body + y.body}; }
  friend Augmented operator-(const Augmented& x, const Augmented& y) { return {x.unit - y.unit, x.body - y.body}; }
  friend Augmented operator*(const Rational& c, const Augmented& x) { return {c * x.unit, c * x.body}; }
  Augmented operator-() const { return {-unit, Rational(-1) * body}; }
};

template <class E>
bool is_zero(const Augmented<E>& x) {
  return x.unit.is_zero() && is_zero(x.body);
}

template <Dendriform A>
using AugmentedOf = Augmented<typename A::Element>;

template <Dendriform A>
AugmentedOf<A> embed(const A&, typename A::Element body) {
  return {Rational(0), std::move(body)};
}

template <Dendriform A>
AugmentedOf<A> unit_of(const A& alg, const Rational& c = Rational(1)) {
  return {c, alg.zero()};
}

template <Dendriform A>
typename A::Element star_body(const A& alg, const typename A::Element& x, const typename A::Element& y) {
  if constexpr (requires { alg.star(x, y); })
    return alg.star(x, y);
  else
    return alg.prec(x, y) + alg.succ(x, y);
}

inline void require_not_both_units(const Rational& u, const Rational& v, const char* op) {
  if (!u.is_zero() && !v.is_zero())
    throw UnitProductUndefined(std::string("1 ") + op + " 1 is undefined");
}

// x ≺ y with a ≺ 1 = a and 1 ≺ a = 0.
template <Dendriform A>
AugmentedOf<A> dend_prec(const A& alg, const AugmentedOf<A>& x, const AugmentedOf<A>& y) {
  require_not_both_units(x.unit, y.unit, "≺");
  AugmentedOf<A> r{Rational(0), alg.prec(x.body, y.body)};
  if (!y.unit.is_zero()) r.body = r.body + y.unit * x.body;
  return r;
}

// x ≻ y with 1 ≻ a = a and a ≻ 1 = 0.
template <Dendriform A>
AugmentedOf<A> dend_succ(const A& alg, const AugmentedOf<A>& x, const AugmentedOf<A>& y) {
  require_not_both_units(x.unit, y.unit, "≻");
  AugmentedOf<A> r{Rational(0), alg.succ(x.body, y.body)};
  if (!x.unit.is_zero()) r.body = r.body + x.unit * y.body;
  return r;
}

template <Dendriform A>
AugmentedOf<A> star(const A& alg, const AugmentedOf<A>& x, const AugmentedOf<A>& y) {
  AugmentedOf<A> r{x.unit * y.unit, star_body(alg, x.body, y.body)};
  if (!x.unit.is_zero()) r.body = r.body + x.unit * y.body;
  if (!y.unit.is_zero()) r.body = r.body + y.unit * x.body;
  return r;
}

// x ⊳ y = x≻y − y≺x
template <Dendriform A>
AugmentedOf<A> prelie_left(const A& alg, const AugmentedOf<A>& x, const AugmentedOf<A>& y) {
  return dend_succ(alg, x, y) - dend_prec(alg, y, x);
}

// x ⊲ y = x≺y − y≻x
template <Dendriform A>
AugmentedOf<A> prelie_right(const A& alg, const AugmentedOf<A>& x, const AugmentedOf<A>& y) {
  return dend_prec(alg, x, y) - dend_succ(alg, y, x);
}

template <Dendriform A>
AugmentedOf<A> lie_bracket(const A& alg, const AugmentedOf<A>& x, const AugmentedOf<A>& y) {
  return star(alg, x, y) - star(alg, y, x);
}

// x ⪯ y := y ≻ x, x ⪰ y := y ≺ x
template <Dendriform A>
struct Opposite {
  using Element = typename A::Element;
  A base;

  Element zero() const { return base.zero(); }
  Element prec(const Element& x, const Element& y) const { return base.succ(y, x); }
  Element succ(const Element& x, const Element& y) const { return base.prec(y, x); }
  Element star(const Element& x, const Element& y) const { return star_body(base, y, x); }
  friend bool operator==(const Opposite&, const Opposite&) = default;
};

}  // namespace dendrix
