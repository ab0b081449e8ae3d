#include "dendrix/verify.hpp"

#include <algorithm>
#include <future>

#include "dendrix/applications.hpp"
#include "dendrix/axioms.hpp"
#include "dendrix/magnus.hpp"
#include "dendrix/planar_tree.hpp"
#include "dendrix/solvers.hpp"

namespace dendrix {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};

template <class F>
auto visit_algebra(const ModelChoice& model, F&& f) {
  return std::visit(overloaded{[&](const FreeModel& m) { return f(FreeDendriform::on_letters(m.generators)); },
                               [&](const auto& m) { return f(RBDendriform<std::decay_t<decltype(m)>>{m}); }},
                    model);
}

// Σ r_i g_i: homogeneous of degree 1 so that order-8 expansions stay small.
FreeElement trial_element(const FreeDendriform& alg, SplitMix64& rng) {
  FreeElement x;
  for (std::size_t i = 0; i < alg.generator_count(); ++i) x = x + rng.nonzero_small_rational() * alg.generator(i);
  return x;
}

template <RotaBaxterModel M>
typename M::Element trial_element(const RBDendriform<M>& alg, SplitMix64& rng) {
  return random_element(alg.model, rng);
}

FreeElement tuple_element(const FreeDendriform& alg, SplitMix64& rng) { return random_element(alg, rng); }

template <RotaBaxterModel M>
typename M::Element tuple_element(const RBDendriform<M>& alg, SplitMix64& rng) {
  return random_element(alg.model, rng);
}

template <Dendriform A>
CheckOutcome compare(std::string name, const Series<A>& lhs, const Series<A>& rhs) {
  const auto k = first_difference(lhs, rhs);
  return {std::move(name), !k, k};
}

template <class T>
CheckOutcome compare(std::string name, const std::vector<T>& lhs, const std::vector<T>& rhs) {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t k = 0; k < n; ++k)
    if (!(lhs[k] == rhs[k])) return {std::move(name), false, static_cast<int>(k)};
  if (lhs.size() != rhs.size()) return {std::move(name), false, static_cast<int>(n)};
  return {std::move(name), true, std::nullopt};
}

CheckOutcome verdict(std::string name, bool holds) { return {std::move(name), holds, std::nullopt}; }

CheckOutcome from_failure(const VerificationFailure& e) { return {e.check(), false, e.first_failing_order()}; }

template <Dendriform A>
std::vector<CheckOutcome> magnus_checks(const A& alg, SplitMix64& rng, int order) {
  const AugmentedOf<A> a = embed(alg, trial_element(alg, rng));
  std::vector<CheckOutcome> out;
  try {
    for (const auto& name : magnus_verify(alg, a, order).checks) out.push_back(verdict(name, true));
  } catch (const VerificationFailure& e) {
    out.push_back(from_failure(e));
  }
  out.push_back(compare("Butcher form = Magnus expansion", butcher_omega(alg, a, order),
                        magnus_omega(alg, a, order).omega));
  return out;
}

template <Dendriform A>
std::vector<CheckOutcome> fer_checks(const A& alg, SplitMix64& rng, int order) {
  const AugmentedOf<A> a = embed(alg, trial_element(alg, rng));
  std::vector<CheckOutcome> out;
  try {
    for (const auto& name : fer_verify(alg, a, order).checks) out.push_back(verdict(name, true));
  } catch (const VerificationFailure& e) {
    out.push_back(from_failure(e));
  }
  if constexpr (requires { alg.model.commutative(); }) {
    if (alg.model.commutative() && alg.model.weight().is_zero()) {
      const FerResult<A> fer = fer_factors(alg, a, order);
      bool vanish = true;
      for (std::size_t n = 1; n < fer.factors.size(); ++n) vanish = vanish && is_zero(fer.factors[n]);
      out.push_back(verdict("U'_n = 0 for n >= 1 (commutative, weight 0)", vanish));
    }
  }
  return out;
}

template <Dendriform A>
std::vector<CheckOutcome> dynkin_checks(const A& alg, SplitMix64& rng, int order) {
  const AugmentedOf<A> a = embed(alg, trial_element(alg, rng));
  std::vector<CheckOutcome> out;
  std::optional<int> failing;
  for (int n = 1; n <= order && !failing; ++n)
    if (!(dynkin(alg, n, a) == prelie_iterate(alg, PreLieSide::left, std::vector<AugmentedOf<A>>(n, a))))
      failing = n;
  out.push_back({"dynkin(n, a) = left pre-Lie iterate", !failing, failing});
  const Series<A> reduced = divide_by_lambda(dynkin_series(solve_10(alg, a, order)));
  out.push_back(compare("lambda^-1 D(Z) = solution of X = a + lambda X|>a", reduced,
                        solve_prelie(alg, a, a, order - 1)));
  out.push_back(compare("lambda^-1 D(Z) residual", rhs_prelie(reduced, a, a), reduced));
  return out;
}

std::vector<CheckOutcome> vogel_checks(const FreeDendriform& alg, SplitMix64& rng, int order) {
  const auto a = embed(alg, trial_element(alg, rng));
  const auto b = embed(alg, trial_element(alg, rng));
  const auto c = embed(alg, trial_element(alg, rng));
  const auto x = solve_11(alg, a, b, -c, order);
  return {compare("X = a + lambda X>b - lambda c<X", rhs_11(x, a, b, -c), x)};
}

template <RotaBaxterModel M>
std::vector<CheckOutcome> vogel_checks(const RBDendriform<M>& alg, SplitMix64& rng, int order) {
  const M& m = alg.model;
  const auto a = random_element(m, rng);
  const auto b = random_element(m, rng);
  const auto c = random_element(m, rng);
  std::vector<CheckOutcome> out;
  const auto x = carrier_bodies(solve_11(alg, embed(alg, a), embed(alg, b), embed(alg, -c), order));
  CarrierSeries<M> rhs = carrier::zero(m, order);
  rhs[0] = a;
  for (int k = 1; k <= order; ++k) rhs[k] = m.mul(m.rb(x[k - 1]), b) + m.mul(c, rb_tilde(m, x[k - 1]));
  out.push_back(compare("X = a + lambda R(X)b + lambda c R~(X)", rhs, x));
  if (!m.commutative()) return out;
  const VogelResult<M> v = vogel_solve(m, a, b, c, order);
  out.push_back(compare("X = B - C", v.dendriform, v.difference_form));
  if (v.scaled_sum_form) out.push_back(compare("X = -(B + C)/theta", v.dendriform, *v.scaled_sum_form));
  out.push_back(compare("Omega' = -log(1 - lambda theta a)/theta", commutative_magnus(m, a, order),
                        commutative_magnus_closed_form(m, a, order)));
  return out;
}

template <Dendriform A>
std::vector<CheckOutcome> axiom_checks(const A& alg, SplitMix64& rng) {
  const auto x = tuple_element(alg, rng);
  const auto y = tuple_element(alg, rng);
  const auto z = tuple_element(alg, rng);
  std::vector<CheckOutcome> out;
  for (const auto& r : dendriform_axioms(alg, x, y, z)) out.push_back(verdict(r.name, r.holds));
  if constexpr (requires { alg.model; })
    for (const auto& r : rota_baxter_axioms(alg.model, x, y, z)) out.push_back(verdict(r.name, r.holds));
  return out;
}

std::vector<CheckOutcome> riccati_checks(const ModelChoice& model, SplitMix64& rng, int order) {
  const auto* pr = std::get_if<PolyRiemann>(&model);
  if (!pr || pr->n != 1) throw UsageError("the riccati check runs in poly-riemann:n=1");
  RiccatiInput in;
  in.a = random_polynomial(rng, 3);
  do in.b = random_polynomial(rng, 3);
  while (in.b.constant_term().is_zero());
  in.c = random_polynomial(rng, 3);
  in.order = order;
  const RiccatiReport report = riccati_residual(in);
  std::optional<int> failing;
  for (int k = 0; k <= order && !failing; ++k)
    if (!is_zero(report.residual[k])) failing = k;
  return {{"second-order ODE residual (x-degree <= " + std::to_string(in.x_degree_bound) + ")", !failing, failing}};
}

std::vector<CheckOutcome> ivp_checks(const ModelChoice& model, SplitMix64& rng, int order) {
  const auto* pr = std::get_if<PolyRiemann>(&model);
  if (!pr) throw UsageError("the ivp check runs in a poly-riemann model");
  const PolyMatrix b = random_element(*pr, rng);
  const PolyMatrix c = random_element(*pr, rng);
  try {
    std::vector<CheckOutcome> out;
    for (const auto& name : ivp_correspondence(b, c, order).checks) out.push_back(verdict(name, true));
    return out;
  } catch (const VerificationFailure& e) {
    return {from_failure(e)};
  }
}

std::vector<CheckOutcome> tree_checks(int order) {
  std::vector<CheckOutcome> out;
  const std::vector<Integer> counts = poincare_counts(order);
  std::optional<int> failing;
  for (int n = 1; n <= order && !failing; ++n)
    if (Integer(static_cast<unsigned long>(enumerate_e1(n).size())) != counts[n - 1]) failing = n;
  out.push_back({"|T^e1(n)| = T_(n-1)", !failing, failing});

  failing.reset();
  for (int n = 1; n <= std::min(order, 7) && !failing; ++n)
    for (const PlanarTree& t : enumerate_planar(n)) {
      std::vector<const PlanarTree*> stack{&t};
      bool odd = false;
      while (!stack.empty()) {
        const PlanarTree* v = stack.back();
        stack.pop_back();
        odd = odd || (v->fertility() > 1 && v->fertility() % 2 == 1);
        for (const auto& ch : v->children()) stack.push_back(&ch);
      }
      if (alpha(t).is_zero() != odd) failing = n;
    }
  out.push_back({"alpha(t) = 0 iff odd fertility > 1", !failing, failing});

  const PoincareResiduals res = poincare_residuals(order);
  const auto first_nonzero = [](const std::vector<Integer>& v) -> std::optional<int> {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) return static_cast<int>(k);
    return std::nullopt;
  };
  const auto t_fail = first_nonzero(res.t_equation);
  const auto w_fail = first_nonzero(res.w_equation);
  out.push_back({"T - z^2 T^3 - 1/(1-z) = 0", !t_fail, t_fail});
  out.push_back({"W - W^3 - z/(1-z) = 0", !w_fail, w_fail});
  return out;
}

}  // namespace

bool TrialReport::passed() const {
  if (error) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

std::optional<int> TrialReport::first_failing_order() const {
  std::optional<int> best;
  for (const auto& c : checks)
    if (c.first_failing_order && (!best || *c.first_failing_order < *best)) best = c.first_failing_order;
  return best;
}

bool VerifyReport::passed() const {
  return !trials.empty() &&
         std::all_of(trials.begin(), trials.end(), [](const TrialReport& t) { return t.passed(); });
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{"vogel", "riccati", "ivp", "magnus", "fer", "dynkin", "axioms", "trees"};
  return names;
}

TrialReport run_trial(const std::string& check, const ModelChoice& model, int order, std::uint64_t seed) {
  TrialReport report;
  report.seed = seed;
  SplitMix64 rng(seed);
  try {
    if (check == "magnus")
      report.checks = visit_algebra(model, [&](const auto& alg) { return magnus_checks(alg, rng, order); });
    else if (check == "fer")
      report.checks = visit_algebra(model, [&](const auto& alg) { return fer_checks(alg, rng, order); });
    else if (check == "dynkin")
      report.checks = visit_algebra(model, [&](const auto& alg) { return dynkin_checks(alg, rng, order); });
    else if (check == "vogel")
      report.checks = visit_algebra(model, [&](const auto& alg) { return vogel_checks(alg, rng, order); });
    else if (check == "axioms")
      report.checks = visit_algebra(model, [&](const auto& alg) { return axiom_checks(alg, rng); });
    else if (check == "riccati")
      report.checks = riccati_checks(model, rng, order);
    else if (check == "ivp")
      report.checks = ivp_checks(model, rng, order);
    else if (check == "trees")
      report.checks = tree_checks(order);
    else
      throw UsageError("unknown check '" + check + "'");
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    report.error = e.kind() + ": " + e.what();
  }
  return report;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw UsageError("--trials must be at least 1");
  VerifyReport report;
  report.options = options;
  if (!options.parallel) {
    for (int t = 0; t < options.trials; ++t)
      report.trials.push_back(run_trial(options.check, options.model, options.order, options.seed + t));
    return report;
  }
  std::vector<std::future<TrialReport>> pending;
  for (int t = 0; t < options.trials; ++t)
    pending.push_back(std::async(std::launch::async, [&options, t] {
      return run_trial(options.check, options.model, options.order, options.seed + t);
    }));
  for (auto& f : pending) report.trials.push_back(f.get());
  return report;
}

Json to_json(const VerifyReport& report) {
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json checks = Json::array();
    for (const auto& c : t.checks) {
      Json entry{{"name", c.name}, {"passed", c.passed}};
      entry["first_failing_order"] = c.first_failing_order ? Json(*c.first_failing_order) : Json(nullptr);
      checks.push_back(entry);
    }
    const auto first = t.first_failing_order();
    Json entry{{"seed", t.seed}, {"passed", t.passed()}};
    entry["first_failing_order"] = first ? Json(*first) : Json(nullptr);
    entry["checks"] = checks;
    if (t.error) entry["error"] = *t.error;
    trials.push_back(entry);
  }
  return Json{{"check", report.options.check},
              {"model", model_string(report.options.model)},
              {"order", report.options.order},
              {"seed", report.options.seed},
              {"trials", trials},
              {"passed", report.passed()}};
}

}  // namespace dendrix
