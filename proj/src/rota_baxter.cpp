#include "dendrix/rota_baxter.hpp"

#include "dendrix/errors.hpp"

namespace dendrix {

namespace {

void same_length(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size()) throw CarrierMismatch("sequence lengths differ");
}

}  // namespace

Sequence operator+(const Sequence& a, const Sequence& b) {
  same_length(a, b);
  Sequence r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r.values[k] += b.values[k];
  return r;
}

Sequence operator-(const Sequence& a, const Sequence& b) {
  same_length(a, b);
  Sequence r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r.values[k] -= b.values[k];
  return r;
}

Sequence operator*(const Rational& c, const Sequence& a) {
  Sequence r = a;
  for (auto& v : r.values) v *= c;
  return r;
}

bool is_zero(const Sequence& s) {
  for (const auto& v : s.values)
    if (!v.is_zero()) return false;
  return true;
}

PolyMatrix PolyRiemann::zero() const { return PolyMatrix(n, n); }

PolyMatrix PolyRiemann::one() const { return identity_matrix<Polynomial>(n, Polynomial(Rational(1)), Polynomial()); }

void PolyRiemann::check(const PolyMatrix& a) const {
  if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n))
    throw CarrierMismatch("expected a " + std::to_string(n) + "x" + std::to_string(n) + " polynomial matrix");
}

PolyMatrix PolyRiemann::mul(const PolyMatrix& a, const PolyMatrix& b) const {
  check(a);
  check(b);
  return a * b;
}

PolyMatrix PolyRiemann::rb(const PolyMatrix& a) const {
  check(a);
  PolyMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = a(i, j).integral();
  return r;
}

std::string PolyRiemann::name() const { return "poly-riemann:n=" + std::to_string(n); }

Sequence SeqPartialSum::zero() const { return Sequence{std::vector<Rational>(length)}; }

Sequence SeqPartialSum::one() const { return Sequence{std::vector<Rational>(length, Rational(1))}; }

void SeqPartialSum::check(const Sequence& a) const {
  if (a.size() != static_cast<std::size_t>(length))
    throw CarrierMismatch("expected a sequence of length " + std::to_string(length));
}

Sequence SeqPartialSum::mul(const Sequence& a, const Sequence& b) const {
  check(a);
  check(b);
  Sequence r = a;
  for (int k = 0; k < length; ++k) r.values[k] *= b.values[k];
  return r;
}

Sequence SeqPartialSum::rb(const Sequence& a) const {
  check(a);
  Sequence r = zero();
  Rational acc(0);
  for (int k = 0; k < length; ++k) {
    r.values[k] = theta * acc;
    acc += a.values[k];
  }
  return r;
}

Sequence SeqPartialSum::inclusive_sum(const Sequence& a) const {
  check(a);
  Sequence r = zero();
  Rational acc(0);
  for (int k = 0; k < length; ++k) {
    acc += a.values[k];
    r.values[k] = theta * acc;
  }
  return r;
}

std::string SeqPartialSum::name() const {
  return "seq:L=" + std::to_string(length) + ",theta=" + theta.str();
}

Polynomial QSummation::rb(const Polynomial& a) const {
  if (!a.constant_term().is_zero()) throw NonzeroConstant("q-summation diverges on a constant term");
  std::vector<Rational> c = a.coeffs();
  Rational qk = q;
  for (std::size_t k = 1; k < c.size(); ++k) {
    c[k] /= Rational(1) - qk;
    qk *= q;
  }
  return Polynomial(std::move(c));
}

Polynomial QSummation::skew_derivation(const Polynomial& f) const { return f - f.dilate(q); }

std::string QSummation::name() const { return "qsum:q=" + q.str(); }

RationalMatrix TriangularSplit::zero() const { return RationalMatrix(n, n); }

RationalMatrix TriangularSplit::one() const { return identity_matrix<Rational>(n, Rational(1), Rational(0)); }

void TriangularSplit::check(const RationalMatrix& a) const {
  if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n))
    throw CarrierMismatch("expected a " + std::to_string(n) + "x" + std::to_string(n) + " rational matrix");
}

RationalMatrix TriangularSplit::mul(const RationalMatrix& a, const RationalMatrix& b) const {
  check(a);
  check(b);
  return a * b;
}

RationalMatrix TriangularSplit::rb(const RationalMatrix& a) const {
  check(a);
  RationalMatrix r = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) r(i, j) = Rational(0);
  return r;
}

std::string TriangularSplit::name() const { return "tri:n=" + std::to_string(n); }

PolyMatrix random_element(const PolyRiemann& m, SplitMix64& rng) {
  PolyMatrix r(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = random_polynomial(rng, 3);
  return r;
}

Sequence random_element(const SeqPartialSum& m, SplitMix64& rng) {
  Sequence s = m.zero();
  for (auto& v : s.values) v = rng.small_rational();
  return s;
}

Polynomial random_element(const QSummation&, SplitMix64& rng) {
  std::vector<Rational> c{Rational(0)};
  for (int k = 1; k <= 3; ++k) c.push_back(rng.small_rational());
  return Polynomial(std::move(c));
}

RationalMatrix random_element(const TriangularSplit& m, SplitMix64& rng) {
  RationalMatrix r(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = rng.small_rational();
  return r;
}

Rational model_weight(const RBModel& m) {
  return std::visit([](const auto& model) { return model.weight(); }, m);
}

namespace {

template <class F>
Carrier visit_carrier(const RBModel& m, const Carrier& x, F f) {
  return std::visit(
      [&](const auto& model) -> Carrier {
        using Elem = typename std::decay_t<decltype(model)>::Element;
        const Elem* e = std::get_if<Elem>(&x);
        if (!e) throw CarrierMismatch("carrier does not belong to model " + model.name());
        return f(model, *e);
      },
      m);
}

}  // namespace

Carrier rb_apply(const RBModel& m, const Carrier& x) {
  return visit_carrier(m, x, [](const auto& model, const auto& e) -> Carrier { return model.rb(e); });
}

Carrier rb_tilde(const RBModel& m, const Carrier& x) {
  return visit_carrier(m, x, [](const auto& model, const auto& e) -> Carrier { return rb_tilde(model, e); });
}

}  // namespace dendrix
