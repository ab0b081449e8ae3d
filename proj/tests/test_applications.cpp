#include <doctest.h>

#include "dendrix/applications.hpp"

using namespace dendrix;

namespace {

PolyMatrix constant_matrix(std::vector<std::vector<long>> rows) {
  PolyMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Polynomial(Rational(rows[i][j]));
  return m;
}

// Y_k = ∫ Y_{k−1}B, the time-ordered exponential of λB.
std::vector<PolyMatrix> time_ordered(const PolyRiemann& m, const PolyMatrix& b, int order) {
  std::vector<PolyMatrix> y{m.one()};
  for (int k = 1; k <= order; ++k) y.push_back(m.rb(m.mul(y.back(), b)));
  return y;
}

}  // namespace

TEST_CASE("Vogel identity in commutative models") {
  const auto run = [](const auto& m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int i = 0; i < 5; ++i) {
      const auto a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
      const auto v = vogel_solve(m, a, b, c, 6);
      CHECK(v.dendriform[0] == a);
      REQUIRE(v.scaled_sum_form);
      CHECK(*v.scaled_sum_form == v.dendriform);
    }
  };
  run(SeqPartialSum{6, Rational(-1)}, 1);
  run(SeqPartialSum{6, Rational(2)}, 2);
  run(QSummation{Rational(-1, 2)}, 3);
}

TEST_CASE("Vogel degenerate and error cases") {
  const SeqPartialSum m{4, Rational(1)};
  SplitMix64 rng(2);
  const auto b = random_element(m, rng), c = random_element(m, rng);
  const auto v = vogel_solve(m, m.zero(), b, c, 4);
  for (const auto& x : v.dendriform) CHECK(is_zero(x));
  for (const auto& x : *v.scaled_sum_form) CHECK(is_zero(x));
  const TriangularSplit t{2};
  CHECK_THROWS_AS(vogel_solve(t, t.one(), t.one(), t.one(), 3), NonCommutativeModel);
}

TEST_CASE("commutative Magnus closed form") {
  const SeqPartialSum m{5, Rational(1, 2)};
  SplitMix64 rng(8);
  for (int i = 0; i < 5; ++i) {
    const auto a = random_element(m, rng);
    const auto closed = commutative_magnus_closed_form(m, a, 6);
    Sequence power = a;
    for (int k = 1; k <= 6; ++k, power = m.mul(power, a)) CHECK(closed[k] == m.theta.pow(k - 1) / Rational(k) * power);
    CHECK(commutative_magnus(m, a, 6) == closed);
  }
  const PolyRiemann r{1};
  const auto a = random_element(r, rng);
  const auto omega = commutative_magnus(r, a, 4);
  CHECK(omega[1] == a);
  for (int k = 2; k <= 4; ++k) CHECK(is_zero(omega[k]));
}

TEST_CASE("Riccati reduction") {
  RiccatiInput in;
  in.a = Polynomial::x() + Polynomial(Rational(2));
  in.b = Polynomial(Rational(1));
  in.c = Polynomial();
  in.order = 4;
  const auto report = riccati_residual(in);
  CHECK(report.vanishes());
  CHECK(report.y[0] == Polynomial(Rational(1)));
  // With b = 1 and c = 0 the equation is ÿ = λ²ay; substitute directly.
  for (int k = 0; k <= 4; ++k) {
    const Polynomial lower = k >= 2 ? in.a * report.y[k - 2] : Polynomial();
    CHECK(report.y[k].derivative().derivative() == lower);
  }

  SplitMix64 rng(40);
  for (int i = 0; i < 5; ++i) {
    RiccatiInput r;
    r.a = random_polynomial(rng, 2);
    do r.b = random_polynomial(rng, 2);
    while (r.b.constant_term().is_zero());
    r.c = random_polynomial(rng, 2);
    CHECK(riccati_residual(r).vanishes());
  }
  in.b = Polynomial::x();
  CHECK_THROWS_AS(riccati_residual(in), ZeroLeadingCoefficient);
}

TEST_CASE("Riccati equation with the coefficient rows exchanged") {
  // X = 1 + λX≻c + λ²(X≻b)≻a with y = R(X) satisfies the labelling-swapped equation.
  SplitMix64 rng(41);
  const Polynomial c = random_polynomial(rng, 2);
  Polynomial a, b;
  do a = random_polynomial(rng, 2), b = random_polynomial(rng, 2);
  while (a.constant_term().is_zero() || b.constant_term().is_zero());
  const auto y = riccati_y(c, b, a, 5);
  const RiccatiInput swapped{b, a, c, 5, 12};
  const auto report = riccati_residual(swapped);
  CHECK(report.y == y);
  CHECK(report.vanishes());
}

TEST_CASE("initial value problem") {
  const PolyRiemann m{2};
  const auto zero = m.zero();
  const auto trivial = ivp_correspondence(zero, zero, 4);
  for (const auto& x : trivial.x) CHECK(is_zero(x));
  CHECK(trivial.y[0] == m.one());

  const auto b = constant_matrix({{0, 1}, {0, 0}});
  const auto with_b = ivp_correspondence(b, zero, 3);
  CHECK(with_b.y == time_ordered(m, b, 3));

  SplitMix64 rng(9);
  for (int i = 0; i < 3; ++i) {
    const auto rb = random_element(m, rng), rc = random_element(m, rng);
    const auto report = ivp_correspondence(rb, rc, 4);
    CHECK(report.checks.size() == 2);
  }
  const PolyRiemann s{1};
  const auto scalar = random_element(s, rng);
  for (const auto& x : ivp_correspondence(scalar, scalar, 4).x) CHECK(is_zero(x));
  CHECK_THROWS_AS(ivp_correspondence(PolyMatrix(2, 2), PolyMatrix(3, 3), 2), ShapeMismatch);
}

TEST_CASE("classical Magnus in the Riemann model") {
  // exp of R(Ω′) under the ordinary product solves Ŷ = 1 + λR(aŶ).
  const PolyRiemann m{2};
  SplitMix64 rng(50);
  const auto a = random_element(m, rng);
  const int order = 5;
  const RBDendriform<PolyRiemann> alg{m};
  const auto omega = carrier_bodies(magnus_omega(alg, embed(alg, a), order).omega);
  const auto exponent = carrier::map<PolyRiemann>(omega, [&](const PolyMatrix& x) { return m.rb(x); });
  const auto lhs = carrier::exp(m, exponent);
  std::vector<PolyMatrix> y{m.one()};
  for (int k = 1; k <= order; ++k) y.push_back(m.rb(m.mul(a, y.back())));
  CHECK(lhs == y);
}
