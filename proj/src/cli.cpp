#include "dendrix/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dendrix/codec.hpp"
#include "dendrix/magnus.hpp"
#include "dendrix/planar_tree.hpp"
#include "dendrix/prelie_expr.hpp"
#include "dendrix/solvers.hpp"
#include "dendrix/verify.hpp"

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

std::optional<int> max_order_cap() {
  const char* env = std::getenv("DENDRIX_MAX_ORDER");
  if (!env || !*env) return std::nullopt;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::string(env).size() || cap < 1) throw std::invalid_argument(env);
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("DENDRIX_MAX_ORDER must be a positive integer, got '") + env + "'");
  }
}

void enforce_cap(const char* flag, int value) {
  if (const auto cap = max_order_cap(); cap && value > *cap)
    throw UsageError(std::string(flag) + " " + std::to_string(value) + " exceeds DENDRIX_MAX_ORDER=" +
                     std::to_string(*cap));
}

int default_order(const Command& cmd, const ModelChoice& model) {
  if (cmd.kind == CommandKind::trees) return cmd.max_order;
  if (cmd.kind == CommandKind::verify && cmd.check == "riccati") return 5;
  return std::holds_alternative<FreeModel>(model) ? 8 : 6;
}

std::string lambda_label(int k) { return "λ^" + std::to_string(k); }

template <Dendriform A>
AugmentedOf<A> magnus_input(const A& alg, std::uint64_t seed) {
  if constexpr (requires { alg.model; }) {
    SplitMix64 rng(seed);
    return embed(alg, random_element(alg.model, rng));
  } else {
    return embed(alg, alg.generator(0));
  }
}

template <Dendriform A>
void print_series_text(const Series<A>& s, int from, std::ostream& out, const std::string& prefix = "") {
  for (int k = from; k <= s.order(); ++k) out << prefix << lambda_label(k) << ": " << augmented_text(s.algebra(), s[k]) << "\n";
}

// Renders λ^k coefficients of Ω′ for the bare generator through the Butcher
// form when it evaluates to the computed coefficient.
std::optional<PreLieCombination> prelie_rendering(const FreeDendriform& alg, const FreeElement& a,
                                                  const FreeElement& coeff, int k) {
  if (!(a == alg.generator(0))) return std::nullopt;
  PreLieCombination terms = butcher_terms(k);
  if (!(evaluate(terms) == coeff)) return std::nullopt;
  return terms;
}

int run_magnus(const Command& cmd, const ModelChoice& model, int order, std::ostream& out) {
  const MagnusForm form = cmd.form == "right" ? MagnusForm::right : MagnusForm::left;
  return visit_algebra(model, [&](const auto& alg) {
    using A = std::decay_t<decltype(alg)>;
    const AugmentedOf<A> a = magnus_input(alg, cmd.seed);
    const Series<A> omega = magnus_omega(alg, a, order, form).omega;
    if (cmd.format == "json") {
      Json j{{"command", "magnus"}, {"model", model_string(model)}, {"form", cmd.form}, {"order", order}};
      j["input"] = encode_element(alg, a.body);
      j["omega"] = encode_series(omega);
      if constexpr (std::is_same_v<A, FreeDendriform>) {
        Json terms = Json::array();
        for (int k = 1; k <= order; ++k)
          if (auto r = prelie_rendering(alg, a.body, omega[k].body, k))
            terms.push_back(Json{{"order", k}, {"terms", encode_combination(*r)}});
        if (!terms.empty()) j["prelie"] = terms;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    for (int k = 1; k <= order; ++k) {
      std::string text = augmented_text(alg, omega[k]);
      if constexpr (std::is_same_v<A, FreeDendriform>)
        if (auto r = prelie_rendering(alg, a.body, omega[k].body, k)) text = r->str();
      out << lambda_label(k) << ": " << text << "\n";
    }
    return 0;
  });
}

int run_fer(const Command& cmd, const ModelChoice& model, int order, std::ostream& out) {
  return visit_algebra(model, [&](const auto& alg) {
    using A = std::decay_t<decltype(alg)>;
    const AugmentedOf<A> a = magnus_input(alg, cmd.seed);
    const FerResult<A> fer = fer_factors(alg, a, order);
    if (cmd.format == "json") {
      Json factors = Json::array();
      for (const auto& u : fer.factors) factors.push_back(encode_series(u));
      Json j{{"command", "fer"}, {"model", model_string(model)}, {"order", order}};
      j["input"] = encode_element(alg, a.body);
      j["factors"] = factors;
      out << j.dump(2) << "\n";
      return 0;
    }
    for (std::size_t n = 0; n < fer.factors.size(); ++n) {
      out << "U'_" << n << ":\n";
      const auto& u = fer.factors[n];
      for (int k = 1; k <= u.order(); ++k)
        if (!is_zero(u[k])) out << "  " << lambda_label(k) << ": " << augmented_text(alg, u[k]) << "\n";
    }
    return 0;
  });
}

template <Dendriform A>
AugmentedOf<A> decode_head(const A& alg, const Json& j) {
  if (j.is_object()) return decode_augmented(alg, j);
  if (j.is_string()) {
    try {
      return unit_of(alg, Rational::parse(j.get<std::string>()));
    } catch (const ParseError&) {
    }
  }
  return embed(alg, decode_element(alg, j));
}

template <Dendriform A>
std::vector<std::vector<typename A::Element>> decode_rows(const A& alg, const Json& j, int count, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != count)
    throw ShapeError(std::string("\"") + key + "\" must have one row per degree");
  std::vector<std::vector<typename A::Element>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ShapeError(std::string("rows of \"") + key + "\" must be arrays");
    std::vector<typename A::Element> r;
    for (const auto& e : row) r.push_back(decode_element(alg, e));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read equation file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("equation file is not valid JSON: " + std::string(e.what()));
  }
}

int run_solve(const Command& cmd, std::ostream& out, std::ostream& err) {
  const Json eq = read_json_file(cmd.equation);
  if (!eq.is_object() || !eq.contains("degree")) throw ParseError("equation needs \"degree\"");
  const ModelChoice model =
      parse_model(cmd.model_given || !eq.contains("model") ? cmd.model : eq.at("model").get<std::string>());
  int order = default_order(cmd, model);
  if (cmd.order) order = *cmd.order;
  else if (eq.contains("order")) order = eq.at("order").get<int>();
  if (order < 1) throw UsageError("order must be at least 1");
  enforce_cap("--order", order);

  const auto degree = eq.at("degree").get<std::vector<int>>();
  if (degree.size() != 2) throw ShapeError("\"degree\" must be [m, n]");
  return visit_algebra(model, [&](const auto& alg) {
    using A = std::decay_t<decltype(alg)>;
    EquationSpec<A> spec;
    spec.m = degree[0];
    spec.n = degree[1];
    spec.a00 = eq.contains("a00") ? decode_head(alg, eq.at("a00")) : unit_of(alg);
    spec.b = decode_rows(alg, eq.value("b", Json::array()), spec.m, "b");
    spec.c = decode_rows(alg, eq.value("c", Json::array()), spec.n, "c");
    spec.validate();

    Series<A> x(alg, order);
    if (spec.m == 1 && spec.n == 1)
      x = solve_11(alg, spec.a00, embed(alg, spec.b[0][0]), embed(alg, spec.c[0][0]), order);
    else if (spec.m >= 1 && spec.n == 0)
      x = solve_m0(alg, spec, order);
    else if (spec.m == 0 && spec.n >= 1)
      x = solve_0n(alg, spec, order);
    else if (spec.m == 0 && spec.n == 0)
      x = constant_series(alg, order, spec.a00);
    else
      throw ShapeError("mixed equations of degree (m,n) with m,n >= 1 are only solved for (1,1)");

    const auto failing = first_difference(rhs_equation(spec, x), x);
    if (cmd.format == "json") {
      Json j{{"command", "solve"}, {"degree", degree}, {"model", model_string(model)}, {"order", order}};
      j["solution"] = encode_series(x);
      j["residual_vanishes"] = !failing;
      out << j.dump(2) << "\n";
    } else {
      print_series_text(x, 0, out);
      out << "residual: " << (failing ? "nonzero at " + lambda_label(*failing) : std::string("0")) << "\n";
    }
    if (failing) {
      err << Json{{"error", "VerificationFailure"}, {"check", "equation residual"}, {"first_failing_order", *failing}}
                 .dump()
          << "\n";
      return 1;
    }
    return 0;
  });
}

int run_trees(const Command& cmd, std::ostream& out) {
  const bool counts = cmd.counts || !cmd.table;
  if (cmd.format == "json") {
    Json j{{"command", "trees"}, {"max_order", cmd.max_order}};
    if (counts) {
      Json c = Json::array();
      for (int n = 1; n <= cmd.max_order; ++n) c.push_back(enumerate_e1(n).size());
      j["counts"] = c;
    }
    if (cmd.table) {
      Json rows = Json::array();
      for (int n = 1; n <= cmd.max_order; ++n)
        for (const auto& t : enumerate_e1(n)) rows.push_back(encode_tree_row(t));
      j["table"] = rows;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (counts) {
    for (int n = 1; n <= cmd.max_order; ++n) out << (n > 1 ? " " : "") << enumerate_e1(n).size();
    out << "\n";
  }
  if (cmd.table)
    for (int n = 1; n <= cmd.max_order; ++n)
      for (const auto& t : enumerate_e1(n)) out << t.degree() << " " << t.str() << " " << alpha(t).str() << "\n";
  return 0;
}

int run_verify(const Command& cmd, std::ostream& out) {
  VerifyOptions opts;
  opts.check = cmd.check;
  std::string model = cmd.model;
  if (!cmd.model_given && (cmd.check == "riccati" || cmd.check == "ivp"))
    model = cmd.check == "riccati" ? "poly-riemann:n=1" : "poly-riemann:n=2";
  opts.model = parse_model(model);
  opts.order = cmd.order ? *cmd.order : default_order(cmd, opts.model);
  enforce_cap("--order", opts.order);
  opts.seed = cmd.seed;
  opts.trials = cmd.trials;
  opts.parallel = cmd.parallel_trials;
  const VerifyReport report = run_verification(opts);
  if (cmd.format == "text") {
    for (const auto& t : report.trials) {
      out << "seed " << t.seed << ": " << (t.passed() ? "pass" : "FAIL");
      if (const auto k = t.first_failing_order()) out << " (first failing order " << *k << ")";
      out << "\n";
      if (t.error) out << "  error: " << *t.error << "\n";
      for (const auto& c : t.checks)
        if (!c.passed) out << "  failed: " << c.name << "\n";
    }
    out << (report.passed() ? "all checks passed" : "verification failed") << "\n";
  } else {
    out << to_json(report).dump(2) << "\n";
  }
  return report.passed() ? 0 : 1;
}

void add_common(CLI::App* app, Command& cmd, bool& format_given) {
  app->add_option("--model", cmd.model, "free[:k] | poly-riemann:n=N | seq:L=N,theta=p/q | qsum:q=p/q | tri:n=N");
  app->add_option_function<std::string>(
         "--format", [&](const std::string& f) { cmd.format = f; format_given = true; }, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  app->add_option("--output", cmd.output, "write to a file instead of stdout");
}

}  // namespace

std::optional<Command> parse_args(const std::vector<std::string>& args, std::string& help) {
  Command cmd;
  bool format_given = false;
  int order = 0;
  CLI::App app{"Dendriform power series: Magnus and Fer expansions, equation solvers, tree tables, verification"};
  app.name("dendrix");
  app.require_subcommand(1, 1);

  auto* magnus = app.add_subcommand("magnus", "pre-Lie Magnus expansion of the (0,1) solution");
  auto* fer = app.add_subcommand("fer", "pre-Lie Fer factors");
  auto* solve = app.add_subcommand("solve", "solve a dendriform equation given as JSON");
  auto* trees = app.add_subcommand("trees", "planar rooted trees indexing the Magnus coefficients");
  auto* verify = app.add_subcommand("verify", "run a verification suite");

  for (auto* sub : {magnus, fer, solve, verify}) {
    sub->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
    add_common(sub, cmd, format_given);
  }
  for (auto* sub : {magnus, fer}) sub->add_option("--seed", cmd.seed, "seed for the model input element");
  magnus->add_option("--form", cmd.form, "left | right")->check(CLI::IsMember({"left", "right"}));
  solve->add_option("--equation", cmd.equation, "equation file")->required();
  trees->add_option("--max-order", cmd.max_order, "largest tree degree")->check(CLI::PositiveNumber);
  trees->add_flag("--counts", cmd.counts, "print the number of trees per degree");
  trees->add_flag("--table", cmd.table, "print degree, tree and coefficient rows");
  trees->add_option_function<std::string>(
           "--format", [&](const std::string& f) { cmd.format = f; format_given = true; }, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  trees->add_option("--output", cmd.output, "write to a file instead of stdout");
  verify->add_option("--check", cmd.check, "suite to run")->required()->check(CLI::IsMember(verify_check_names()));
  verify->add_option("--seed", cmd.seed, "first trial seed");
  verify->add_option("--trials", cmd.trials, "number of trials")->check(CLI::PositiveNumber);
  verify->add_flag("--parallel-trials", cmd.parallel_trials, "run trials concurrently");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    help = app.help();
    for (auto* sub : app.get_subcommands()) help = sub->help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (magnus->parsed()) cmd.kind = CommandKind::magnus;
  else if (fer->parsed()) cmd.kind = CommandKind::fer;
  else if (solve->parsed()) cmd.kind = CommandKind::solve;
  else if (trees->parsed()) cmd.kind = CommandKind::trees;
  else cmd.kind = CommandKind::verify;

  const CLI::App* active = app.get_subcommands().front();
  if (cmd.kind != CommandKind::trees) {
    if (active->count("--order") > 0) cmd.order = order;
    cmd.model_given = active->count("--model") > 0;
  }
  if (cmd.kind == CommandKind::verify && !format_given) cmd.format = "json";
  if (cmd.order) enforce_cap("--order", *cmd.order);
  if (cmd.kind == CommandKind::trees) enforce_cap("--max-order", cmd.max_order);
  parse_model(cmd.model);
  return cmd;
}

int run(const Command& cmd, std::ostream& stdout_stream, std::ostream& err) {
  std::ofstream file;
  if (!cmd.output.empty()) {
    file.open(cmd.output);
    if (!file) throw UsageError("cannot write '" + cmd.output + "'");
  }
  std::ostream& out = cmd.output.empty() ? stdout_stream : file;
  switch (cmd.kind) {
    case CommandKind::magnus:
    case CommandKind::fer: {
      const ModelChoice model = parse_model(cmd.model);
      const int order = cmd.order ? *cmd.order : default_order(cmd, model);
      enforce_cap("--order", order);
      return cmd.kind == CommandKind::magnus ? run_magnus(cmd, model, order, out) : run_fer(cmd, model, order, out);
    }
    case CommandKind::solve:
      return run_solve(cmd, out, err);
    case CommandKind::trees:
      return run_trees(cmd, out);
    case CommandKind::verify:
      return run_verify(cmd, out);
  }
  return 1;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<Command> cmd;
  try {
    std::string help;
    cmd = parse_args(args, help);
    if (!cmd) {
      out << help;
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    return run(*cmd, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    Json j{{"error", e.kind()}, {"message", e.what()}, {"check", e.check()}};
    j["first_failing_order"] = e.first_failing_order() ? Json(*e.first_failing_order()) : Json(nullptr);
    err << j.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    err << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace dendrix
