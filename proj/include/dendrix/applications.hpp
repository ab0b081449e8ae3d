#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dendrix/errors.hpp"
#include "dendrix/magnus.hpp"
#include "dendrix/polynomial.hpp"
#include "dendrix/rota_baxter.hpp"
#include "dendrix/series.hpp"
#include "dendrix/solvers.hpp"

namespace dendrix {

// λ-series over a model carrier with the model's own product, coefficients 0..order.
template <RotaBaxterModel M>
using CarrierSeries = std::vector<typename M::Element>;

namespace carrier {

template <RotaBaxterModel M>
CarrierSeries<M> zero(const M& m, int order) {
  return CarrierSeries<M>(order + 1, m.zero());
}

template <RotaBaxterModel M>
CarrierSeries<M> mul(const M& m, const CarrierSeries<M>& s, const CarrierSeries<M>& t) {
  const int order = static_cast<int>(s.size()) - 1;
  CarrierSeries<M> r = zero(m, order);
  for (int i = 0; i <= order; ++i) {
    if (is_zero(s[i])) continue;
    for (int j = 0; i + j <= order; ++j)
      if (!is_zero(t[j])) r[i + j] = r[i + j] + m.mul(s[i], t[j]);
  }
  return r;
}

template <RotaBaxterModel M>
CarrierSeries<M> scale(const Rational& c, CarrierSeries<M> s) {
  for (auto& x : s) x = c * x;
  return s;
}

template <RotaBaxterModel M>
CarrierSeries<M> add(CarrierSeries<M> s, const CarrierSeries<M>& t) {
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = s[k] + t[k];
  return s;
}

template <RotaBaxterModel M, class F>
CarrierSeries<M> map(const CarrierSeries<M>& s, F f) {
  CarrierSeries<M> r;
  for (const auto& x : s) r.push_back(f(x));
  return r;
}

// exp(s) for s without constant term.
template <RotaBaxterModel M>
CarrierSeries<M> exp(const M& m, const CarrierSeries<M>& s) {
  if (!is_zero(s.front())) throw BadConstantTerm("exp needs a series without constant term");
  const int order = static_cast<int>(s.size()) - 1;
  CarrierSeries<M> result = zero(m, order), power = zero(m, order);
  result[0] = power[0] = m.one();
  for (int n = 1; n <= order; ++n) {
    power = scale<M>(Rational(1, n), mul(m, power, s));
    result = add<M>(result, power);
  }
  return result;
}

// θ⁻¹ log(1 + λθx) = Σ_k (−1)^{k+1} θ^{k−1} λ^k x^k / k, defined for every θ.
template <RotaBaxterModel M>
CarrierSeries<M> scaled_log(const M& m, const typename M::Element& x, const Rational& theta, int order) {
  CarrierSeries<M> r = zero(m, order);
  typename M::Element power = m.one();
  for (int k = 1; k <= order; ++k) {
    power = m.mul(power, x);
    const Rational coeff = Rational(k % 2 ? 1 : -1, k) * theta.pow(k - 1);
    r[k] = coeff * power;
  }
  return r;
}

}  // namespace carrier

// Bodies of a unit-free λ-series as carrier elements.
template <RotaBaxterModel M>
CarrierSeries<M> carrier_bodies(const Series<RBDendriform<M>>& s) {
  CarrierSeries<M> r;
  for (int k = 0; k <= s.order(); ++k) {
    if (!s[k].unit.is_zero()) throw BadConstantTerm("series has a unit component");
    r.push_back(s[k].body);
  }
  return r;
}

template <RotaBaxterModel M>
struct VogelResult {
  CarrierSeries<M> dendriform;  // X = a + λX≻b − λc≺X
  CarrierSeries<M> b_part;
  CarrierSeries<M> c_part;
  CarrierSeries<M> difference_form;                 // B − C
  std::optional<CarrierSeries<M>> scaled_sum_form;  // −(B + C)/θ, θ ≠ 0
};

// X = a + λR(X)b + λcR̃(X) through the dendriform (1,1) solver, and the closed
// forms assembled from exp/log in the model.
template <RotaBaxterModel M>
VogelResult<M> vogel_solve(const M& m, const typename M::Element& a, const typename M::Element& b,
                           const typename M::Element& c, int order) {
  const RBDendriform<M> alg{m};
  VogelResult<M> result;
  result.dendriform =
      carrier_bodies(solve_11(alg, embed(alg, a), embed(alg, b), embed(alg, -c), order));
  if (!m.commutative()) throw NonCommutativeModel(m.name() + " is not commutative");

  const Rational theta = m.weight();
  const auto r = [&](const typename M::Element& x) { return m.rb(x); };
  const auto rt = [&](const typename M::Element& x) { return rb_tilde(m, x); };
  const CarrierSeries<M> log_c = carrier::scaled_log(m, c, theta, order);
  const CarrierSeries<M> log_b = carrier::scaled_log(m, b, theta, order);
  const CarrierSeries<M> alpha = carrier::add<M>(log_b, carrier::scale<M>(Rational(-1), log_c));

  CarrierSeries<M> a_series = carrier::zero(m, order);
  a_series[0] = a;
  const CarrierSeries<M> inner = carrier::mul(
      m, a_series, carrier::exp(m, carrier::add<M>(carrier::map<M>(log_c, r), carrier::map<M>(log_b, rt))));

  result.c_part = carrier::mul(m, carrier::exp(m, carrier::map<M>(alpha, r)), carrier::map<M>(inner, r));
  result.b_part = carrier::mul(m, carrier::exp(m, carrier::scale<M>(Rational(-1), carrier::map<M>(alpha, rt))),
                               carrier::map<M>(inner, rt));
  result.difference_form = carrier::add<M>(result.b_part, carrier::scale<M>(Rational(-1), result.c_part));
  if (!theta.is_zero())
    result.scaled_sum_form =
        carrier::scale<M>(Rational(-1) / theta, carrier::add<M>(result.b_part, result.c_part));
  return result;
}

// −log(1 − λθa)/θ = Σ_k θ^{k−1} λ^k a^k / k
template <RotaBaxterModel M>
CarrierSeries<M> commutative_magnus_closed_form(const M& m, const typename M::Element& a, int order) {
  if (!m.commutative()) throw NonCommutativeModel(m.name() + " is not commutative");
  return carrier::scale<M>(Rational(-1), carrier::scaled_log(m, -a, m.weight(), order));
}

template <RotaBaxterModel M>
CarrierSeries<M> commutative_magnus(const M& m, const typename M::Element& a, int order) {
  const RBDendriform<M> alg{m};
  return carrier_bodies(magnus_omega(alg, embed(alg, a), order).omega);
}

struct RiccatiInput {
  Polynomial a, b, c;
  int order = 5;
  int x_degree_bound = 12;
};

struct RiccatiReport {
  int x_degree_bound = 0;
  std::vector<Polynomial> y;         // λ-coefficients of y = R(X)
  std::vector<Polynomial> residual;  // λ-coefficients, truncated at x_degree_bound
  bool vanishes() const;
};

// X = 1 + λX≻c + λ²(X≻a)≻b in the scalar Riemann model, y = R(X) with R(1) = 1,
// and the left side of b ÿ − (ḃ + λbc)ẏ − (λ (c/b)' + λ²a) b² y = 0.
RiccatiReport riccati_residual(const RiccatiInput& in);

// Same, with the coefficient rows given directly: X = 1 + λX≻b11 + λ²(X≻b21)≻b22.
std::vector<Polynomial> riccati_y(const Polynomial& b11, const Polynomial& b21, const Polynomial& b22, int order);

struct IvpReport {
  int order = 0;
  CarrierSeries<PolyRiemann> x;  // Ẏ
  CarrierSeries<PolyRiemann> y;  // Y₀ + R(X)
  std::vector<std::string> checks;
};

// Ẏ = λ(YB − CY), Y(0) = Y₀ = 1: X = λ·solve_11(A, B, −C) with A = Y₀B − CY₀.
// Checks ∂R(X) = X and Ẏ = λ(YB − CY); throws VerificationFailure otherwise.
IvpReport ivp_correspondence(const PolyMatrix& b, const PolyMatrix& c, int order);

}  // namespace dendrix
