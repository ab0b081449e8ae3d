#pragma once

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "dendrix/dendriform.hpp"
#include "dendrix/errors.hpp"
#include "dendrix/series.hpp"
#include "dendrix/solvers.hpp"

namespace dendrix {

// left: Ω′ = Σ B_m/m! L⊳^{(m)}[Ω′](λa), L⊳[Ω′](y) = Ω′⊳y.
// right: Ω′ = Σ (−1)^m B_m/m! R⊲^{(m)}[Ω′](λa), R⊲[Ω′](y) = y⊲Ω′.
enum class MagnusForm { left, right };

template <Dendriform A>
struct MagnusResult {
  Series<A> omega;
  MagnusForm form;
};

template <Dendriform A>
struct FerResult {
  std::vector<Series<A>> factors;
};

namespace detail {

// Coefficient n of v_m = Ω′⊳v_{m−1} only involves Ω′_i for i ≤ n−m, so the
// fixed point is reached one order at a time with each product formed once.
template <Dendriform A>
Series<A> magnus_left(const A& alg, const AugmentedOf<A>& a, int order) {
  Series<A> omega(alg, order);
  if (order == 0) return omega;
  omega[1] = a;
  // v[m][k]: coefficient k of L^{(m)}[Ω′](λa)
  std::vector<std::vector<AugmentedOf<A>>> v(order, std::vector<AugmentedOf<A>>(order + 1, embed(alg, alg.zero())));
  v[0][1] = a;
  for (int n = 2; n <= order; ++n) {
    AugmentedOf<A> acc = embed(alg, alg.zero());
    for (int m = 1; m < n; ++m) {
      AugmentedOf<A> vmn = embed(alg, alg.zero());
      for (int i = 1; i <= n - m; ++i) {
        if (is_zero(omega[i]) || is_zero(v[m - 1][n - i])) continue;
        vmn = vmn + prelie_left(alg, omega[i], v[m - 1][n - i]);
      }
      v[m][n] = vmn;
      const Rational coeff = bernoulli(m) / factorial(m);
      if (!coeff.is_zero()) acc = acc + coeff * vmn;
    }
    omega[n] = acc;
  }
  return omega;
}

// Literal fixed-point passes: start from λa and re-apply the defining map.
template <Dendriform A>
Series<A> magnus_right(const A& alg, const AugmentedOf<A>& a, int order) {
  const Series<A> seed = Series<A>::monomial(alg, order, 1, a.body);
  if (!a.unit.is_zero()) throw UnitProductUndefined("Magnus expansion needs a unit-free generator");
  Series<A> omega = seed;
  for (int pass = 1; pass < order; ++pass) {
    Series<A> total = seed, term = seed;
    for (int m = 1; m < order; ++m) {
      term = series_prelie_right(term, omega);
      if (is_zero(term)) break;
      const Rational coeff = (m % 2 ? Rational(-1) : Rational(1)) * bernoulli(m) / factorial(m);
      if (!coeff.is_zero()) total = total + coeff * term;
    }
    omega = total;
  }
  return omega;
}

}  // namespace detail

template <Dendriform A>
MagnusResult<A> magnus_omega(const A& alg, const AugmentedOf<A>& a, int order, MagnusForm form = MagnusForm::left) {
  if (!a.unit.is_zero()) throw UnitProductUndefined("Magnus expansion needs a unit-free generator");
  if (form == MagnusForm::left) return {detail::magnus_left(alg, a, order), form};
  return {detail::magnus_right(alg, a, order), form};
}

inline int fer_factor_count(int order) {
  if (order <= 1) return 1;
  return std::bit_width(static_cast<unsigned>(order - 1)) + 1;
}

// U′₀ = λa, U′_{n+1} = Σ_{l>0} (−1)^l l/(l+1)! L⊳[U′_n]^{(l)}(U′_n).
template <Dendriform A>
FerResult<A> fer_factors(const A& alg, const AugmentedOf<A>& a, int order) {
  if (!a.unit.is_zero()) throw UnitProductUndefined("Fer expansion needs a unit-free generator");
  FerResult<A> result;
  result.factors.push_back(Series<A>::monomial(alg, order, 1, a.body));
  const int count = fer_factor_count(order);
  for (int n = 1; n < count; ++n) {
    const Series<A>& u = result.factors.back();
    Series<A> next(alg, order), term = u;
    for (int l = 1; l <= order; ++l) {
      term = series_prelie_left(u, term);
      if (is_zero(term)) break;
      const Rational coeff = Rational(l % 2 ? -l : l) / factorial(l + 1);
      next = next + coeff * term;
    }
    result.factors.push_back(next);
  }
  return result;
}

// exp*(U′₀) ★ exp*(U′₁) ★ …
template <Dendriform A>
Series<A> fer_product(const FerResult<A>& fer) {
  Series<A> acc = Series<A>::one(fer.factors.front().algebra(), fer.factors.front().order());
  for (const auto& u : fer.factors) acc = series_star(acc, series_exp(u));
  return acc;
}

// … ★ exp*(−U′₁) ★ exp*(−U′₀)
template <Dendriform A>
Series<A> fer_inverse_product(const FerResult<A>& fer) {
  Series<A> acc = Series<A>::one(fer.factors.front().algebra(), fer.factors.front().order());
  for (auto it = fer.factors.rbegin(); it != fer.factors.rend(); ++it) acc = series_star(acc, series_exp(-*it));
  return acc;
}

struct MagnusReport {
  int order = 0;
  std::vector<std::string> checks;
};

namespace detail {

template <Dendriform A>
void require_equal(const Series<A>& lhs, const Series<A>& rhs, const std::string& check, MagnusReport& report) {
  if (auto k = first_difference(lhs, rhs)) throw VerificationFailure(check, *k);
  report.checks.push_back(check);
}

}  // namespace detail

// Cross-checks the Magnus expansion against the (0,1) solver; throws
// VerificationFailure at the first failing order.
template <Dendriform A>
MagnusReport magnus_verify(const A& alg, const AugmentedOf<A>& a, int order) {
  MagnusReport report;
  report.order = order;
  const Series<A> y = solve_01(alg, a, order);
  const Series<A> left = magnus_omega(alg, a, order, MagnusForm::left).omega;
  const Series<A> right = magnus_omega(alg, a, order, MagnusForm::right).omega;
  detail::require_equal(series_exp(left), y, "exp*(omega) = Y", report);
  detail::require_equal(series_exp(-left), series_inverse(y), "exp*(-omega) = Y^-1", report);
  detail::require_equal(left, right, "left form = right form", report);
  return report;
}

template <Dendriform A>
MagnusReport fer_verify(const A& alg, const AugmentedOf<A>& a, int order) {
  MagnusReport report;
  report.order = order;
  const Series<A> y = solve_01(alg, a, order);
  const FerResult<A> fer = fer_factors(alg, a, order);
  for (std::size_t n = 0; n < fer.factors.size(); ++n) {
    const int expected = 1 << n;
    const int lowest = fer.factors[n].lowest_order();
    if (lowest <= order && lowest < expected)
      throw VerificationFailure("U'_" + std::to_string(n) + " starts at order 2^n", lowest);
  }
  report.checks.push_back("U'_n starts at order 2^n");
  detail::require_equal(fer_product(fer), y, "ordered product of exp*(U'_n) = Y", report);
  detail::require_equal(fer_inverse_product(fer), series_inverse(y), "reversed product of exp*(-U'_n) = Y^-1", report);
  return report;
}

}  // namespace dendrix
