#pragma once

#include <concepts>
#include <string>
#include <variant>
#include <vector>

#include "dendrix/dendriform.hpp"
#include "dendrix/matrix.hpp"
#include "dendrix/polynomial.hpp"
#include "dendrix/random.hpp"
#include "dendrix/rational.hpp"

namespace dendrix {

// Fixed-length rational sequence with the pointwise product.
struct Sequence {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend Sequence operator+(const Sequence& a, const Sequence& b);
  friend Sequence operator-(const Sequence& a, const Sequence& b);
  friend Sequence operator*(const Rational& c, const Sequence& a);
  Sequence operator-() const { return Rational(-1) * *this; }
};

bool is_zero(const Sequence& s);

using PolyMatrix = Matrix<Polynomial>;
using RationalMatrix = Matrix<Rational>;

// Entrywise ∫₀ˣ on n×n polynomial matrices; weight 0.
struct PolyRiemann {
  using Element = PolyMatrix;
  int n = 1;

  Rational weight() const { return Rational(0); }
  bool commutative() const { return n == 1; }
  Element zero() const;
  Element one() const;
  Element mul(const Element& a, const Element& b) const;
  Element rb(const Element& a) const;
  void check(const Element& a) const;
  std::string name() const;
  friend bool operator==(const PolyRiemann&, const PolyRiemann&) = default;
};

// R(a)_n = θ Σ_{k<n} a_k on length-L sequences; weight θ.
struct SeqPartialSum {
  using Element = Sequence;
  int length = 8;
  Rational theta = Rational(1);

  Rational weight() const { return theta; }
  bool commutative() const { return true; }
  Element zero() const;
  Element one() const;
  Element mul(const Element& a, const Element& b) const;
  Element rb(const Element& a) const;
  // θ Σ_{k≤n} a_k, a Rota–Baxter operator of weight −θ.
  Element inclusive_sum(const Element& a) const;
  void check(const Element& a) const;
  std::string name() const;
  friend bool operator==(const SeqPartialSum&, const SeqPartialSum&) = default;
};

// x^k ↦ x^k/(1−q^k); weight −1. The carrier holds all polynomials so that
// closed forms may multiply by constants, but R rejects a constant term.
struct QSummation {
  using Element = Polynomial;
  Rational q = Rational(1, 2);

  Rational weight() const { return Rational(-1); }
  bool commutative() const { return true; }
  Element zero() const { return {}; }
  Element one() const { return Polynomial(Rational(1)); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element rb(const Element& a) const;
  // f(x) − f(qx)
  Element skew_derivation(const Element& f) const;
  void check(const Element&) const {}
  std::string name() const;
  friend bool operator==(const QSummation&, const QSummation&) = default;
};

// Projection onto the upper triangle including the diagonal; weight −1.
struct TriangularSplit {
  using Element = RationalMatrix;
  int n = 2;

  Rational weight() const { return Rational(-1); }
  bool commutative() const { return n == 1; }
  Element zero() const;
  Element one() const;
  Element mul(const Element& a, const Element& b) const;
  Element rb(const Element& a) const;
  void check(const Element& a) const;
  std::string name() const;
  friend bool operator==(const TriangularSplit&, const TriangularSplit&) = default;
};

template <class M>
concept RotaBaxterModel = std::equality_comparable<M> &&
    requires(const M& m, const typename M::Element& x) {
      { m.weight() } -> std::convertible_to<Rational>;
      { m.zero() } -> std::convertible_to<typename M::Element>;
      { m.one() } -> std::convertible_to<typename M::Element>;
      { m.mul(x, x) } -> std::convertible_to<typename M::Element>;
      { m.rb(x) } -> std::convertible_to<typename M::Element>;
      { m.commutative() } -> std::convertible_to<bool>;
    };

template <RotaBaxterModel M>
typename M::Element rb_tilde(const M& m, const typename M::Element& x) {
  return (-m.weight()) * x - m.rb(x);
}

// a ≺ b = aR(b) + θab
template <RotaBaxterModel M>
typename M::Element rb_prec(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.mul(a, m.rb(b)) + m.weight() * m.mul(a, b);
}

// a ≻ b = R(a)b
template <RotaBaxterModel M>
typename M::Element rb_succ(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.mul(m.rb(a), b);
}

// a ★_θ b = aR(b) + R(a)b + θab
template <RotaBaxterModel M>
typename M::Element rb_double_product(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.mul(a, m.rb(b)) + m.mul(m.rb(a), b) + m.weight() * m.mul(a, b);
}

template <RotaBaxterModel M>
typename M::Element tri_lt(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.mul(a, m.rb(b));
}

template <RotaBaxterModel M>
typename M::Element tri_gt(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.mul(m.rb(a), b);
}

template <RotaBaxterModel M>
typename M::Element tri_dot(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.weight() * m.mul(a, b);
}

// Extension to the augmented algebra: R(1) = 1, R̃(1) = −1.
template <RotaBaxterModel M>
typename M::Element rb_augmented(const M& m, const Augmented<typename M::Element>& x) {
  return x.unit * m.one() + m.rb(x.body);
}

template <RotaBaxterModel M>
typename M::Element rb_tilde_augmented(const M& m, const Augmented<typename M::Element>& x) {
  return (-x.unit) * m.one() + rb_tilde(m, x.body);
}

// The dendriform algebra derived from a Rota–Baxter model.
template <RotaBaxterModel M>
struct RBDendriform {
  using Element = typename M::Element;
  M model;

  Element zero() const { return model.zero(); }
  Element prec(const Element& a, const Element& b) const { return rb_prec(model, a, b); }
  Element succ(const Element& a, const Element& b) const { return rb_succ(model, a, b); }
  Element star(const Element& a, const Element& b) const { return rb_double_product(model, a, b); }
  friend bool operator==(const RBDendriform&, const RBDendriform&) = default;
};

PolyMatrix random_element(const PolyRiemann& m, SplitMix64& rng);
Sequence random_element(const SeqPartialSum& m, SplitMix64& rng);
Polynomial random_element(const QSummation& m, SplitMix64& rng);
RationalMatrix random_element(const TriangularSplit& m, SplitMix64& rng);

// Runtime-selected model and carrier.
using RBModel = std::variant<PolyRiemann, SeqPartialSum, QSummation, TriangularSplit>;
using Carrier = std::variant<PolyMatrix, Sequence, Polynomial, RationalMatrix>;

Rational model_weight(const RBModel& m);
Carrier rb_apply(const RBModel& m, const Carrier& x);
Carrier rb_tilde(const RBModel& m, const Carrier& x);

}  // namespace dendrix
