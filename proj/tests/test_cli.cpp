#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dendrix/cli.hpp"
#include "dendrix/codec.hpp"
#include "dendrix/errors.hpp"
#include "dendrix/solvers.hpp"
#include "dendrix/verify.hpp"

using namespace dendrix;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("argument parsing") {
  std::string help;
  const auto m = parse_args({"magnus", "--order", "4"}, help);
  REQUIRE(m);
  CHECK(m->kind == CommandKind::magnus);
  CHECK(m->order == 4);
  CHECK(m->model == "free:1");
  CHECK(m->form == "left");
  CHECK(m->format == "text");
  const auto t = parse_args({"trees", "--max-order", "10", "--counts"}, help);
  REQUIRE(t);
  CHECK(t->kind == CommandKind::trees);
  CHECK(t->counts);
  CHECK_THROWS_AS(parse_args({"solve", "--order", "5"}, help), UsageError);
  CHECK_THROWS_AS(parse_args({"magnus", "--bogus"}, help), UsageError);
  CHECK_THROWS_AS(parse_args({}, help), UsageError);
  CHECK(!parse_args({"--help"}, help));
  CHECK(!help.empty());
}

TEST_CASE("magnus and trees commands") {
  const auto m = cli({"magnus", "--order", "2", "--format", "text"});
  CHECK(m.code == 0);
  CHECK(m.out.find("λ^1: +1·a") != std::string::npos);
  CHECK(m.out.find("λ^2: -1/2·(a▷a)") != std::string::npos);
  const auto t = cli({"trees", "--max-order", "10", "--counts"});
  CHECK(t.code == 0);
  CHECK(t.out == "1 1 2 4 10 26 73 211 630 1918\n");
  const auto table = cli({"trees", "--max-order", "3", "--table"});
  CHECK(table.out.find("[[][]]") != std::string::npos);
  CHECK(table.out.find("1/12") != std::string::npos);
  const auto j = Json::parse(cli({"magnus", "--order", "3", "--format", "json"}).out);
  CHECK(j.contains("omega"));
}

TEST_CASE("exit codes") {
  CHECK(cli({"magnus", "--model", "nope"}).code == 2);
  CHECK(cli({"solve", "--order", "5"}).code == 2);
  CHECK(cli({"verify", "--check", "dynkin", "--order", "8"}).code == 0);
  const std::string bad = write_temp("dendrix_bad_equation.json", R"json({"degree": [1, 0], "a00": "1", "b": [["+1·(. q .)"]]})json");
  const auto r = cli({"solve", "--equation", bad, "--model", "free:1"});
  CHECK(r.code == 1);
  const auto err = Json::parse(r.err);
  CHECK(err.contains("error"));
}

TEST_CASE("order cap from the environment") {
  ::setenv("DENDRIX_MAX_ORDER", "3", 1);
  CHECK(cli({"magnus", "--order", "5"}).code == 2);
  CHECK(cli({"magnus", "--order", "3"}).code == 0);
  ::unsetenv("DENDRIX_MAX_ORDER");
}

TEST_CASE("solve command") {
  const std::string eq = write_temp("dendrix_eq.json", R"json({
    "model": "free:3", "order": 4, "degree": [1, 1],
    "a00": "+1·(. a .)", "b": [["+1·(. b .)"]], "c": [["+1·(. c .)"]]})json");
  const auto r = cli({"solve", "--equation", eq, "--format", "json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  const auto alg = FreeDendriform::on_letters(3);
  const auto a = embed(alg, alg.generator(0)), b = embed(alg, alg.generator(1)), c = embed(alg, alg.generator(2));
  CHECK(decode_series(alg, j.at("solution")) == solve_11(alg, a, b, c, 4));
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"verify", "--check", "axioms", "--model", "tri:n=2", "--seed", "7", "--trials", "3"};
  const auto first = cli(args), second = cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  auto parallel = args;
  parallel.push_back("--parallel-trials");
  CHECK(cli(parallel).out == first.out);
}

TEST_CASE("verification trials") {
  for (const auto& check : verify_check_names()) {
    if (check == "riccati" || check == "ivp") continue;
    INFO(check);
    const auto report = run_trial(check, FreeModel{1}, 5, 3);
    CHECK(report.passed());
  }
  CHECK(run_trial("riccati", PolyRiemann{1}, 4, 2).passed());
  CHECK(run_trial("ivp", PolyRiemann{2}, 4, 2).passed());
  CHECK_THROWS_AS(run_trial("riccati", FreeModel{1}, 4, 2), UsageError);
  const auto vogel = run_trial("vogel", SeqPartialSum{6, Rational(1)}, 4, 1);
  CHECK(!vogel.passed());
}

TEST_CASE("model strings") {
  for (const std::string s : {"free:2", "poly-riemann:n=2", "seq:L=8,theta=1/2", "qsum:q=1/2", "tri:n=3"})
    CHECK(model_string(parse_model(s)) == s);
  CHECK(std::get<FreeModel>(parse_model("free")).generators == 1);
  CHECK_THROWS_AS(parse_model("qsum:q=1"), UsageError);
  CHECK_THROWS_AS(parse_model("tri:m=3"), UsageError);
  CHECK_THROWS_AS(parse_model("free:0"), UsageError);
}

TEST_CASE("codec round trips") {
  CHECK(Json(Rational(-1, 2).str()).dump() == "\"-1/2\"");
  CHECK(PlanarTree::corolla(2).str() == "[[][]]");
  CHECK(encode_tree_row(PlanarTree::corolla(2)).at("alpha") == "1/12");

  SplitMix64 rng(77);
  const auto free = FreeDendriform::on_letters(2);
  const auto fx = random_element(free, rng);
  CHECK(decode_element(free, encode_element(free, fx)) == fx);

  const auto round = [&](const auto& m) {
    const RBDendriform<std::decay_t<decltype(m)>> alg{m};
    const auto x = random_element(m, rng);
    CHECK(decode_element(alg, encode_element(alg, x)) == x);
    Series<RBDendriform<std::decay_t<decltype(m)>>> s(alg, 2);
    s[0] = unit_of(alg, Rational(3, 2));
    s[2].body = x;
    CHECK(decode_series(alg, encode_series(s)) == s);
  };
  round(PolyRiemann{2});
  round(SeqPartialSum{4, Rational(1)});
  round(QSummation{Rational(1, 3)});
  round(TriangularSplit{2});

  const auto combo = butcher_terms(4);
  CHECK(decode_combination(encode_combination(combo)).terms == combo.terms);
  CHECK_THROWS_AS(decode_element(RBDendriform<SeqPartialSum>{SeqPartialSum{3, Rational(1)}}, Json::array({"1", "2"})),
                  CarrierMismatch);
}
