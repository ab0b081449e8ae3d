#include <doctest.h>

#include "dendrix/free_algebra.hpp"
#include "dendrix/magnus.hpp"
#include "dendrix/planar_tree.hpp"
#include "dendrix/rota_baxter.hpp"

using namespace dendrix;

namespace {

using Aug = Augmented<FreeElement>;
using FSeries = Series<FreeDendriform>;

Aug el(const FreeElement& x) { return {Rational(0), x}; }

}  // namespace

TEST_CASE("low-order Magnus coefficients") {
  const auto alg = FreeDendriform::on_letters(1);
  const Aug a = el(alg.generator(0));
  const FSeries omega = magnus_omega(alg, a, 3).omega;
  const Aug aa = prelie_left(alg, a, a);
  CHECK(is_zero(omega[0]));
  CHECK(omega[1] == a);
  CHECK(omega[2] == Rational(-1, 2) * aa);
  CHECK(omega[3] == Rational(1, 4) * prelie_left(alg, aa, a) + Rational(1, 12) * prelie_left(alg, a, aa));
}

TEST_CASE("left and right forms agree") {
  const auto alg = FreeDendriform::on_letters(2);
  SplitMix64 rng(14);
  for (int i = 0; i < 3; ++i) {
    const Aug a = el(random_element(alg, rng, 2, 2));
    CHECK(magnus_omega(alg, a, 5, MagnusForm::left).omega == magnus_omega(alg, a, 5, MagnusForm::right).omega);
  }
}

TEST_CASE("Magnus and Fer verification") {
  const auto alg = FreeDendriform::on_letters(1);
  const Aug a = el(alg.generator(0));
  CHECK(magnus_verify(alg, a, 8).checks.size() == 3);
  CHECK(magnus_verify(alg, a, 1).order == 1);
  CHECK(fer_verify(alg, a, 8).checks.size() == 3);
  CHECK(magnus_omega(alg, a, 1).omega == FSeries::monomial(alg, 1, 1, a.body));
}

TEST_CASE("Magnus expansion in the models") {
  const auto run = [](const auto& m, std::uint64_t seed) {
    const RBDendriform<std::decay_t<decltype(m)>> alg{m};
    SplitMix64 rng(seed);
    for (int i = 0; i < 3; ++i) {
      const auto a = embed(alg, random_element(m, rng));
      CHECK_NOTHROW(magnus_verify(alg, a, 5));
      CHECK_NOTHROW(fer_verify(alg, a, 5));
      CHECK(butcher_omega(alg, a, 5) == magnus_omega(alg, a, 5).omega);
    }
  };
  run(PolyRiemann{2}, 1);
  run(SeqPartialSum{6, Rational(-1)}, 2);
  run(QSummation{Rational(1, 2)}, 3);
  run(TriangularSplit{2}, 4);
}

TEST_CASE("nilpotent constant matrix in the Riemann model") {
  const PolyRiemann m{2};
  const RBDendriform<PolyRiemann> alg{m};
  PolyMatrix a(2, 2);
  a(0, 1) = Polynomial(Rational(1));
  CHECK(is_zero(m.mul(a, a)));
  const auto omega = magnus_omega(alg, embed(alg, a), 4).omega;
  const PolyMatrix ra = m.rb(a);
  CHECK(omega[1].body == a);
  CHECK(omega[2].body == Rational(-1, 2) * (m.mul(ra, a) - m.mul(a, ra)));
}

TEST_CASE("commutative Riemann model has a trivial Magnus and Fer expansion") {
  const PolyRiemann m{1};
  const RBDendriform<PolyRiemann> alg{m};
  SplitMix64 rng(19);
  for (int i = 0; i < 5; ++i) {
    const auto a = embed(alg, random_element(m, rng));
    const auto omega = magnus_omega(alg, a, 6).omega;
    CHECK(omega == Series<RBDendriform<PolyRiemann>>::monomial(alg, 6, 1, a.body));
    const auto fer = fer_factors(alg, a, 6);
    for (std::size_t n = 1; n < fer.factors.size(); ++n) CHECK(is_zero(fer.factors[n]));
  }
}

TEST_CASE("Fer factors double in order") {
  CHECK(fer_factor_count(1) == 1);
  CHECK(fer_factor_count(2) == 2);
  CHECK(fer_factor_count(4) == 3);
  CHECK(fer_factor_count(8) == 4);
  CHECK(fer_factor_count(9) == 5);

  const auto alg = FreeDendriform::on_letters(1);
  const Aug a = el(alg.generator(0));
  const int order = 8;
  const auto fer = fer_factors(alg, a, order);
  CHECK(fer.factors[0] == FSeries::monomial(alg, order, 1, a.body));
  CHECK(fer.factors[1].lowest_order() == 2);
  CHECK(fer.factors[1][2] == Rational(-1, 2) * prelie_left(alg, a, a));

  // Peeling factors off Y leaves remainders starting at orders 2, 4, 8.
  FSeries rest = solve_01(alg, a, order);
  for (std::size_t n = 0; n + 1 < fer.factors.size(); ++n) {
    rest = series_star(series_exp(-fer.factors[n]), rest);
    CHECK((rest - FSeries::one(alg, order)).lowest_order() == (1 << (n + 1)));
  }
  CHECK(fer_product(fer) == solve_01(alg, a, order));
  CHECK(fer_inverse_product(fer) == series_inverse(solve_01(alg, a, order)));
}

TEST_CASE("verification failure reports the order") {
  const auto alg = FreeDendriform::on_letters(1);
  const FSeries one = FSeries::one(alg, 3);
  FSeries other = one;
  other[2].body = alg.generator(0);
  MagnusReport report;
  try {
    detail::require_equal(one, other, "probe", report);
    FAIL("expected a verification failure");
  } catch (const VerificationFailure& e) {
    CHECK(e.check() == "probe");
    CHECK(e.first_failing_order() == 2);
  }
}
