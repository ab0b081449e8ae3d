#include <doctest.h>

#include "dendrix/free_algebra.hpp"
#include "dendrix/rota_baxter.hpp"
#include "dendrix/series.hpp"

using namespace dendrix;

namespace {

using FSeries = Series<FreeDendriform>;

FSeries linear(const FreeDendriform& alg, const FreeElement& a, int order, const Rational& c = Rational(1)) {
  return FSeries::one(alg, order) + FSeries::monomial(alg, order, 1, c * a);
}

FSeries random_series(const FreeDendriform& alg, SplitMix64& rng, int order, bool unit) {
  FSeries s = unit ? FSeries::one(alg, order) : FSeries(alg, order);
  for (int k = 1; k <= order; ++k) s[k].body = random_element(alg, rng, 2, 2);
  return s;
}

}  // namespace

TEST_CASE("series products") {
  const auto alg = FreeDendriform::on_letters(1);
  const auto a = alg.generator(0);
  const FSeries s = linear(alg, a, 4);
  CHECK(series_star(FSeries::one(alg, 4), s) == s);
  const FSeries expected = FSeries::one(alg, 4) - FSeries::monomial(alg, 4, 2, alg.star(a, a));
  CHECK(series_star(s, linear(alg, a, 4, Rational(-1))) == expected);
  CHECK_THROWS_AS(series_star(s, FSeries::one(alg, 3)), OrderMismatch);
  CHECK_THROWS_AS(series_star(s, FSeries::one(FreeDendriform::on_letters(2), 4)), AlgebraMismatch);
}

TEST_CASE("coefficients of a product are the Cauchy sums") {
  const auto alg = FreeDendriform::on_letters(2);
  SplitMix64 rng(8);
  const FSeries s = random_series(alg, rng, 4, false), t = random_series(alg, rng, 4, false);
  const FSeries p = series_prec(s, t);
  for (int k = 0; k <= 4; ++k) {
    FreeElement sum;
    for (int i = 0; i <= k; ++i) sum = sum + alg.prec(s[i].body, t[k - i].body);
    CHECK(p[k].body == sum);
  }
}

TEST_CASE("exponential and logarithm") {
  const auto alg = FreeDendriform::on_letters(1);
  const auto a = alg.generator(0);
  CHECK(series_exp(FSeries(alg, 5)) == FSeries::one(alg, 5));
  const FSeries la = FSeries::monomial(alg, 2, 1, a);
  const FSeries e = series_exp(la);
  CHECK(e == FSeries::one(alg, 2) + la + FSeries::monomial(alg, 2, 2, Rational(1, 2) * alg.star(a, a)));
  for (int n = 1; n <= 6; ++n) CHECK(series_log(series_exp(FSeries::monomial(alg, n, 1, a))) == FSeries::monomial(alg, n, 1, a));
  CHECK_THROWS_AS(series_exp(FSeries::one(alg, 2)), BadConstantTerm);
  CHECK_THROWS_AS(series_log(FSeries(alg, 2)), BadConstantTerm);
}

TEST_CASE("exp and log are inverse bijections on random series") {
  const auto alg = FreeDendriform::on_letters(2);
  SplitMix64 rng(13);
  for (int i = 0; i < 5; ++i) {
    const FSeries x = random_series(alg, rng, 4, false);
    CHECK(series_log(series_exp(x)) == x);
    const FSeries g = random_series(alg, rng, 4, true);
    CHECK(series_exp(series_log(g)) == g);
  }
}

TEST_CASE("inverse") {
  const auto alg = FreeDendriform::on_letters(1);
  const auto a = alg.generator(0);
  CHECK(series_inverse(FSeries::one(alg, 3)) == FSeries::one(alg, 3));
  FSeries geometric = FSeries::one(alg, 5);
  FreeElement power = a;
  for (int k = 1; k <= 5; ++k, power = alg.star(power, a)) geometric[k].body = Rational(-1).pow(k) * power;
  CHECK(series_inverse(linear(alg, a, 5)) == geometric);
  CHECK_THROWS_AS(series_inverse(FSeries(alg, 2)), BadConstantTerm);

  SplitMix64 rng(2);
  const auto alg2 = FreeDendriform::on_letters(2);
  for (int i = 0; i < 5; ++i) {
    const FSeries g = Rational(3) * random_series(alg2, rng, 4, true);
    CHECK(series_star(g, series_inverse(g)) == FSeries::constant(alg2, 4, Rational(1)));
    CHECK(series_star(series_inverse(g), g) == FSeries::constant(alg2, 4, Rational(1)));
  }
}

TEST_CASE("star product of series is associative") {
  const auto alg = FreeDendriform::on_letters(2);
  SplitMix64 rng(17);
  const FSeries x = random_series(alg, rng, 3, true), y = random_series(alg, rng, 3, false),
                z = random_series(alg, rng, 3, true);
  CHECK(series_star(series_star(x, y), z) == series_star(x, series_star(y, z)));
}

TEST_CASE("words and their antipode") {
  const auto alg = FreeDendriform::on_letters(1);
  const Augmented<FreeElement> a{Rational(0), alg.generator(0)};
  CHECK(word_iterate(alg, Side::succ, {a}) == a);
  CHECK(word_iterate(alg, Side::prec, {a, a, a}).body == alg.prec(a.body, alg.prec(a.body, a.body)));
  CHECK(prelie_iterate(alg, PreLieSide::left, {a}) == a);
  CHECK(prelie_iterate(alg, PreLieSide::left, {a, a}) == prelie_left(alg, a, a));

  // Σ(−λ)ⁿ w≻ⁿ(a) is the ★-inverse of Σλⁿ w≺ⁿ(a).
  const int order = 6;
  FSeries y = FSeries::one(alg, order), tilde = FSeries::one(alg, order);
  for (int n = 1; n <= order; ++n) {
    const std::vector<Augmented<FreeElement>> word(n, a);
    y[n] = word_iterate(alg, Side::prec, word);
    tilde[n] = Rational(-1).pow(n) * word_iterate(alg, Side::succ, word);
  }
  CHECK(series_star(tilde, y) == FSeries::one(alg, order));
  CHECK(series_star(y, tilde) == FSeries::one(alg, order));
  CHECK(series_inverse(y) == tilde);
}

TEST_CASE("second pre-Lie iterate in the Riemann model is a commutator") {
  const PolyRiemann m{2};
  const RBDendriform<PolyRiemann> alg{m};
  SplitMix64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const Augmented<PolyMatrix> a{Rational(0), random_element(m, rng)};
    const auto ra = m.rb(a.body);
    CHECK(prelie_iterate(alg, PreLieSide::left, {a, a}).body == m.mul(ra, a.body) - m.mul(a.body, ra));
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int n = 1; n <= 20; ++n) {
    Rational sum(0);
    for (int k = 0; k <= n; ++k) sum += binomial(n + 1, k) * bernoulli(k);
    CHECK(sum.is_zero());
  }
}
