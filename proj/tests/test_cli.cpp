#include <doctest.h>

#include <json.hpp>

#include "lnd/cli.hpp"
#include "support.hpp"

using namespace lnd;
using namespace lnd::cli;

TEST_CASE("fixtures parse to the expected derivations") {
  const auto tp = build_problem(parse_problem(fixture("tparam").text));
  CHECK(tp.derivation.image(0) == test::P(tp.ring, "t*(1 - t)"));
  CHECK(tp.derivation.image(1) == test::P(tp.ring, "-t*X1 + 1 - t"));
  REQUIRE(tp.factored_b);
  CHECK(tp.factored_b->size() == 2);
  const auto w = build_problem(parse_problem(fixture("wink1").text));
  CHECK(w.derivation.image(2) == test::P(w.ring, "b*X - a*Y"));
}

TEST_CASE("printing is canonical and round-trips") {
  for (const auto& f : fixtures()) {
    const auto spec = parse_problem(f.text);
    const auto text = print_problem(spec);
    CHECK(parse_problem(text) == spec);
    CHECK(print_problem(parse_problem(text)) == text);
  }
  const auto spec = parse_problem("# c\nvar  Y X\nparam t\nDX = t*(1-t) # comment\nD Y = 2*X*t\ncap dim 500\n");
  CHECK(print_problem(spec) == "param t\nvar Y X\nD Y = 2*t*X\nD X = -t^2 + t\ncap dim 500\n");
}

TEST_CASE("parse errors") {
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("param t\nvar X1\nDX1 = t **\n") == std::pair<std::size_t, std::size_t>{3, 10});
  CHECK(error_at("var X\nD Y = 1\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(error_at("var X Y\nD X = 1\n") == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(error_at("var X\nD X = Q\n") == std::pair<std::size_t, std::size_t>{2, 7});
  CHECK(error_at("var X\nD X = 1\nD X = 2\n").first == 3);
  CHECK(error_at("var X\nD X = 1\nbounds 2\n").first == 3);
  CHECK(error_at("var X\nD X = 1\nfrobnicate\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_at("param t\nvar X\nD X = t\nfactor X mult 1\n").first == 4);
  CHECK(error_at("param t\nvar X t\nD X = 1\n") == std::pair<std::size_t, std::size_t>{2, 7});
  CHECK(error_at("param t\n").first != 0);
}

TEST_CASE("exit codes follow report verdicts") {
  CHECK(exit_code(Status::pass) == 0);
  CHECK(exit_code(Status::fail) == 1);
  CHECK(exit_code(Status::inconclusive) == 2);
  CHECK(exit_code(Status::unsupported) == 2);
  CHECK(exit_code(Status::input_error) == 3);

  RunOptions o;
  auto r = run("check", parse_problem("var X\nD X = X\n"), o);
  CHECK(r.status == Status::unsupported);
  CHECK(exit_code(r.status) == 2);

  o.n = 2;
  r = run("image-ideal", parse_problem(fixture("tparam").text), o);
  CHECK(r.status == Status::pass);
  CHECK(r.generators == std::vector<std::string>{"t - 1"});
  bool theorem = false, m = false;
  for (const auto& [k, v] : r.fields) {
    theorem = theorem || (k == "theorem" && v == "2varquasi_PID");
    m = m || (k == "m" && v == "1");
  }
  CHECK(theorem);
  CHECK(m);

  o.n = 1;
  o.bounds = oracle::Bounds{2, 2};
  r = run("verify", parse_problem(fixture("wink1").text), o);
  CHECK(r.status == Status::pass);
  CHECK(r.generators.size() == 3);

  o.bounds = oracle::Bounds{3, 2};
  o.predicted = std::vector<std::string>{"t*(1 - t)"};
  r = run("verify", parse_problem(fixture("tparam").text), o);
  CHECK(r.status == Status::fail);
  CHECK(exit_code(r.status) == 1);
  CHECK_FALSE(r.witnesses.empty());

  CHECK_THROWS_AS(run("verify", parse_problem(fixture("tparam").text), [] {
                    RunOptions p;
                    p.predicted = std::vector<std::string>{"t **"};
                    return p;
                  }()),
                  ParseError);
}

TEST_CASE("kernel command") {
  RunOptions o;
  auto r = run("kernel", parse_problem(fixture("tparam").text), o);
  CHECK(r.status == Status::pass);
  REQUIRE(r.generators.size() == 1);
  r = run("kernel", parse_problem(fixture("pid3").text), o);
  CHECK(r.status == Status::pass);
  CHECK(r.generators.size() == 2);
}

TEST_CASE("every fixture meets its expectation") {
  const auto all = run_examples({});
  CHECK(all.status == Status::pass);
  CHECK(all.children.size() == fixtures().size());
  for (const auto& c : all.children) {
    INFO(c.command);
    bool met = false;
    for (const auto& [k, v] : c.fields) met = met || (k == "expectation" && v == "met");
    CHECK(met);
  }
  RunOptions o;
  o.name = "no-such-fixture";
  CHECK(run_examples(o).status == Status::input_error);
}

TEST_CASE("JSON report schema") {
  RunOptions o;
  o.n = 1;
  const auto j = nlohmann::json::parse(render_json(run("image-ideal", parse_problem(fixture("inice").text), o)));
  for (const char* key : {"command", "spec-echo", "verdict", "generators", "certificates", "witnesses"})
    CHECK(j.contains(key));
  CHECK(j["verdict"] == "PASS");
  CHECK(j["spec-echo"] == print_problem(parse_problem(fixture("inice").text)));
}
