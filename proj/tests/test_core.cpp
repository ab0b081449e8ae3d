#include <doctest.h>

#include "dendrix/free_algebra.hpp"
#include "dendrix/matrix_dend.hpp"
#include "dendrix/series.hpp"

using namespace dendrix;

namespace {

using Aug = Augmented<FreeElement>;

Aug el(const FreeElement& x) { return {Rational(0), x}; }

// Every term of x has tree degree d.
bool homogeneous(const FreeElement& x, std::uint32_t d) {
  for (const auto& [id, c] : x.terms())
    if (tree_degree(id) != d || c.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational::parse(" -6/4 ") == Rational(-3, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(6, 2) == Rational(15));
}

TEST_CASE("splitmix64 is reproducible and stays in range") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());
  SplitMix64 r(3);
  for (int i = 0; i < 500; ++i) {
    const Rational q = r.nonzero_small_rational();
    CHECK(!q.is_zero());
    CHECK(abs(q.numerator()) <= 9);
    CHECK(q.denominator() <= 3);
    const auto u = r.uniform(-2, 5);
    CHECK(u >= -2);
    CHECK(u <= 5);
  }
}

TEST_CASE("dendriform products on small words") {
  const auto alg = FreeDendriform::on_letters(1);
  const auto a = alg.generator(0);
  CHECK(alg.prec(alg.prec(a, a), a) == alg.prec(a, alg.prec(a, a)) + alg.prec(a, alg.succ(a, a)));
  CHECK(alg.succ(a, alg.succ(a, a)) == alg.succ(alg.prec(a, a), a) + alg.succ(alg.succ(a, a), a));
  CHECK(alg.star(a, a) == alg.prec(a, a) + alg.succ(a, a));
  CHECK(is_zero(alg.star(alg.star(a, a), a) - alg.star(a, alg.star(a, a))));
  CHECK(alg.prec(a, a) != alg.succ(a, a));
}

TEST_CASE("augmented unit rules and pre-Lie products") {
  const auto alg = FreeDendriform::on_letters(2);
  const Aug a = el(alg.generator(0)), b = el(alg.generator(1)), one = unit_of(alg);
  CHECK(star(alg, one, a) == a);
  CHECK(star(alg, a, one) == a);
  CHECK(prelie_left(alg, a, a).body == alg.succ(a.body, a.body) - alg.prec(a.body, a.body));
  CHECK(prelie_right(alg, a, b) == -prelie_left(alg, b, a));
  CHECK(is_zero(lie_bracket(alg, a, a)));
  CHECK(lie_bracket(alg, a, b) == prelie_left(alg, a, b) - prelie_left(alg, b, a));
  CHECK(is_zero(prelie_right(alg, a, one)));
  CHECK_THROWS_AS(prelie_left(alg, one, one), UnitProductUndefined);
  CHECK_THROWS_AS(dend_succ(alg, one + a, one), UnitProductUndefined);
}

TEST_CASE("free algebra identities on seeded random triples") {
  const auto alg = FreeDendriform::on_letters(2);
  SplitMix64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Aug x = el(random_element(alg, rng)), y = el(random_element(alg, rng)), z = el(random_element(alg, rng));
    const auto lp = [&](const Aug& u, const Aug& v) { return prelie_left(alg, u, v); };
    const auto rp = [&](const Aug& u, const Aug& v) { return prelie_right(alg, u, v); };
    CHECK(is_zero(lp(lp(x, y), z) - lp(x, lp(y, z)) - lp(lp(y, x), z) + lp(y, lp(x, z))));
    CHECK(is_zero(rp(rp(x, y), z) - rp(x, rp(y, z)) - rp(rp(x, z), y) + rp(x, rp(z, y))));
    CHECK(star(alg, x, y) + lp(y, x) == dend_succ(alg, x, y) + dend_succ(alg, y, x));
    CHECK(star(alg, star(alg, x, y), z) == star(alg, x, star(alg, y, z)));
  }
}

TEST_CASE("products of homogeneous elements are homogeneous of the summed degree") {
  const auto alg = FreeDendriform::on_letters(3);
  SplitMix64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto dx = static_cast<std::uint32_t>(rng.uniform(1, 3)), dy = static_cast<std::uint32_t>(rng.uniform(1, 3));
    const auto x = FreeElement::tree(random_tree(3, dx, rng), rng.nonzero_small_rational()) +
                   FreeElement::tree(random_tree(3, dx, rng), rng.nonzero_small_rational());
    const auto y = FreeElement::tree(random_tree(3, dy, rng), rng.nonzero_small_rational());
    CHECK(homogeneous(alg.prec(x, y), dx + dy));
    CHECK(homogeneous(alg.succ(x, y), dx + dy));
    CHECK(homogeneous(alg.star(x, y), dx + dy));
  }
}

TEST_CASE("cancellation leaves no stored zero coefficients") {
  const auto alg = FreeDendriform::on_letters(1);
  const auto a = alg.generator(0);
  const auto p = alg.prec(a, a);
  CHECK((p - p).size() == 0);
  CHECK(is_zero(Rational(0) * p));
  const auto mixed = Rational(1, 2) * p + alg.succ(a, a) - Rational(1, 2) * p;
  CHECK(mixed.size() == 1);
  CHECK(mixed.coefficient(p.terms()[0].first).is_zero());
}

TEST_CASE("free element text") {
  const FreeDendriform alg({"x", "y"});
  const auto x = alg.generator("x"), y = alg.generator("y");
  const auto e = Rational(3, 2) * alg.succ(x, y) - alg.prec(y, x);
  CHECK(alg.parse(alg.format(e)) == e);
  CHECK(alg.parse("(. x .)") == x);
  CHECK(alg.format(FreeElement{}) == "0");
  CHECK_THROWS_AS(alg.parse("+1·(. z .)"), ParseError);
  CHECK_THROWS_AS(alg.parse("+1·(. x"), ParseError);
}

TEST_CASE("matrix lift of the free algebra") {
  const auto alg = FreeDendriform::on_letters(2);
  SplitMix64 rng(9);
  const auto m = matrix_lift(alg, 2);
  const auto random_matrix = [&] {
    Matrix<FreeElement> x(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) x(i, j) = random_element(alg, rng, 2, 2);
    return x;
  };
  for (int i = 0; i < 10; ++i) {
    const auto x = random_matrix(), y = random_matrix(), z = random_matrix();
    CHECK(m.prec(m.prec(x, y), z) == m.prec(x, m.star(y, z)));
    CHECK(m.prec(m.succ(x, y), z) == m.succ(x, m.prec(y, z)));
    CHECK(m.succ(x, m.succ(y, z)) == m.succ(m.star(x, y), z));
    const Augmented<Matrix<FreeElement>> one = unit_of(m), xa{Rational(0), x};
    CHECK(dend_succ(m, one, xa) == xa);
  }
  const auto single = matrix_lift(alg, 1);
  const auto a = alg.generator(0), b = alg.generator(1);
  Matrix<FreeElement> ma(1, 1, a), mb(1, 1, b);
  CHECK(single.prec(ma, mb)(0, 0) == alg.prec(a, b));
  CHECK(single.succ(ma, mb)(0, 0) == alg.succ(a, b));
}
