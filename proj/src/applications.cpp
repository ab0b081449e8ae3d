#include "dendrix/applications.hpp"

namespace dendrix {

namespace {

PolyMatrix scalar(const Polynomial& p) {
  PolyMatrix m(1, 1);
  m(0, 0) = p;
  return m;
}

PolyMatrix entrywise_derivative(const PolyMatrix& m) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).derivative();
  return r;
}

}  // namespace

bool RiccatiReport::vanishes() const {
  for (const auto& p : residual)
    if (!is_zero(p)) return false;
  return true;
}

std::vector<Polynomial> riccati_y(const Polynomial& b11, const Polynomial& b21, const Polynomial& b22, int order) {
  const PolyRiemann model{1};
  const RBDendriform<PolyRiemann> alg{model};
  EquationSpec<RBDendriform<PolyRiemann>> spec;
  spec.m = 2;
  spec.a00 = unit_of(alg);
  spec.b = {{scalar(b11)}, {scalar(b21), scalar(b22)}};
  const auto x = solve_m0(alg, spec, order);
  std::vector<Polynomial> y;
  for (int k = 0; k <= order; ++k) y.push_back(rb_augmented(model, x[k])(0, 0));
  return y;
}

RiccatiReport riccati_residual(const RiccatiInput& in) {
  if (in.b.constant_term().is_zero()) throw ZeroLeadingCoefficient("b(0) = 0, b is not invertible in x");
  const int bound = in.x_degree_bound;
  RiccatiReport report;
  report.x_degree_bound = bound;
  report.y = riccati_y(in.c, in.a, in.b, in.order);

  // c/b one degree past the bound so that its derivative is exact through it.
  const Polynomial ratio = (in.c * series_reciprocal(in.b, bound + 1)).truncated(bound + 1);
  const Polynomial ratio_prime = ratio.derivative();
  const Polynomial b_prime = in.b.derivative();
  const Polynomial b_sq = in.b * in.b;
  const auto& y = report.y;
  for (int k = 0; k <= in.order; ++k) {
    Polynomial r = in.b * y[k].derivative().derivative() - b_prime * y[k].derivative();
    if (k >= 1) r = r - in.b * in.c * y[k - 1].derivative() - ratio_prime * b_sq * y[k - 1];
    if (k >= 2) r = r - in.a * b_sq * y[k - 2];
    report.residual.push_back(r.truncated(bound));
  }
  return report;
}

IvpReport ivp_correspondence(const PolyMatrix& b, const PolyMatrix& c, int order) {
  if (!b.square() || b.rows() != c.rows() || b.cols() != c.cols())
    throw ShapeMismatch("B and C must be square matrices of the same size");
  const PolyRiemann model{static_cast<int>(b.rows())};
  const RBDendriform<PolyRiemann> alg{model};
  const PolyMatrix y0 = model.one();
  const PolyMatrix a = model.mul(y0, b) - model.mul(c, y0);

  IvpReport report;
  report.order = order;
  const auto inner = carrier_bodies(solve_11(alg, embed(alg, a), embed(alg, b), embed(alg, -c), order));
  report.x.assign(order + 1, model.zero());
  for (int k = 1; k <= order; ++k) report.x[k] = inner[k - 1];
  report.y.push_back(y0);
  for (int k = 1; k <= order; ++k) report.y.push_back(model.rb(report.x[k]));

  for (int k = 0; k <= order; ++k)
    if (!(entrywise_derivative(model.rb(report.x[k])) == report.x[k]))
      throw VerificationFailure("d/dx R(X) = X", k);
  report.checks.push_back("d/dx R(X) = X");

  for (int k = 0; k <= order; ++k) {
    const PolyMatrix lhs = entrywise_derivative(report.y[k]);
    const PolyMatrix rhs =
        k == 0 ? model.zero() : model.mul(report.y[k - 1], b) - model.mul(c, report.y[k - 1]);
    if (!(lhs == rhs)) throw VerificationFailure("dY/dx = lambda (YB - CY)", k);
  }
  report.checks.push_back("dY/dx = lambda (YB - CY)");
  return report;
}

}  // namespace dendrix
