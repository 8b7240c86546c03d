#include <doctest.h>

#include "tensordim/errors.hpp"
#include "tensordim/interpreter.hpp"
#include "tensordim/script.hpp"

using namespace tensordim;
using namespace tensordim::script;

TEST_CASE("parsing the minimal script") {
  Script s = parse_script(
      "algebra A = ring(x, y) / ideal(y^2 - x^3)\nquery dim(A)\n");
  REQUIRE(s.algebras.size() == 1);
  CHECK(s.algebras[0].name == "A");
  CHECK(s.algebras[0].variables == std::vector<std::string>{"x", "y"});
  REQUIRE(s.algebras[0].generators.size() == 1);
  CHECK(!s.algebras[0].prime);
  REQUIRE(s.queries.size() == 1);
  CHECK(s.queries[0].qname == "dim");
}

TEST_CASE("empty input parses to an empty script") {
  Script s = parse_script("");
  CHECK(s.algebras.empty());
  CHECK(s.profiles.empty());
  CHECK(s.queries.empty());
  CHECK(format_report(execute_script(s), ReportMode::machine).empty());
}

TEST_CASE("profile bindings and multiple queries") {
  Script s = parse_script(
      "profile P = pullback_field(r = 1)\n"
      "query af(P)\n"
      "query afn(P, 1)\n");
  REQUIRE(s.profiles.size() == 1);
  CHECK(s.profiles[0].kind == "pullback_field");
  REQUIRE(s.queries.size() == 2);

  auto records = execute_script(s);
  REQUIRE(records.size() == 2);
  CHECK(records[0].value == "false");
  CHECK(records[1].value == "true");
}

TEST_CASE("polynomial syntax: optional '*', rationals, signs") {
  Script s = parse_script(
      "algebra A = ring(x, y) / ideal(3/2 x^2 y - 2, -x + y) prime\n");
  Environment env = bind_script(s);
  const AlgebraPresentation& a = env.algebras.at("A");
  REQUIRE(a.generators().size() == 2);
  CHECK(a.generators()[0].coefficient(Monomial({2, 1})) == Rational(3) / 2);
  CHECK(a.generators()[0].coefficient(Monomial({0, 0})) == -2);
  CHECK(a.generators()[1].coefficient(Monomial({1, 0})) == -1);
  CHECK(a.asserted_prime());
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      check_script(parse_script(text));
      FAIL("expected a parse error for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() >= 1);
    }
  };
  expect_error("algebra A = ring(x,, y)\n", 1);
  expect_error("algebra A = ring(x)\nalgebra A = ring(y)\n", 2);
  expect_error("profile P = mystery(1)\n", 1);
  expect_error("query frobnicate(P)\n", 1);
  expect_error("algebra A = ring(x) / ideal(z)\n", 1);     // unknown variable
  expect_error("query dim(Missing)\n", 1);                  // unresolved name
  expect_error("profile P = pullback_field(r = 0)\n", 1);   // bad parameter
  expect_error("profile P = field(2)\nquery afn(P)\n", 2);  // arity
  expect_error("profile P = field(2)\nquery ht_mixed(P, P, node(9), min)\n",
               2);  // node range
}

TEST_CASE("bindings are order-insensitive") {
  Script s = parse_script(
      "profile P = from_algebra(A)\n"
      "algebra A = ring(x, y) / ideal(y^2 - x^3) prime\n"
      "query dim(P)\n");
  auto records = execute_script(s);
  REQUIRE(records.size() == 1);
  CHECK(records[0].value == "1");
}

TEST_CASE("an empty ideal presents the whole polynomial ring") {
  auto records =
      execute_script(parse_script("algebra A = ring(x) / ideal()\nquery dim(A)\n"));
  REQUIRE(records.size() == 1);
  CHECK(records[0].value == "1");
  CHECK(!records[0].refused);
}

TEST_CASE("queries dispatch to both oracle and engine routes") {
  Script s = parse_script(
      "algebra C = ring(x, y) / ideal(y^2 - x^3) prime\n"
      "algebra L = ring(u)\n"
      "profile PC = from_algebra(C)\n"
      "profile PL = from_algebra(L)\n"
      "query dim_tensor(C, L)\n"
      "query dim_tensor(PC, PL)\n"
      "query height(C)\n"
      "query groebner(C)\n");
  auto records = execute_script(s);
  REQUIRE(records.size() == 4);
  CHECK(records[0].value == "2");
  CHECK(records[1].value == "2");
  CHECK(records[2].value == "1");
  CHECK(records[3].value == "{x^3 - y^2}");
  for (const auto& r : records) CHECK(!r.refused);
}

TEST_CASE("refusals become records, not failures") {
  Script s = parse_script(
      "profile P = pullback_field(r = 1)\n"
      "profile B = field(2)\n"
      "algebra N = ring(x, y) / ideal(x y)\n"
      "query dim_tensor_af(P, B)\n"
      "query height(N)\n"
      "query dim(N)\n");
  auto records = execute_script(s);
  REQUIRE(records.size() == 3);
  CHECK(records[0].refused);
  CHECK(records[0].value == "-");
  CHECK(records[0].witness.find("M") != std::string::npos);
  CHECK(records[1].refused);
  CHECK(!records[2].refused);
  CHECK(records[2].value == "1");
  CHECK(any_refused(records));
}

TEST_CASE("the empty spectrum is a signal, not a refusal") {
  auto records = execute_script(
      parse_script("algebra U = ring(x) / ideal(1)\nquery dim(U)\n"));
  REQUIRE(records.size() == 1);
  CHECK(!records[0].refused);
  CHECK(records[0].value == "empty-spectrum");
}

TEST_CASE("machine reports are tab-separated and stable") {
  std::string text =
      "profile P = pullback_field(r = 1)\n"
      "query dim_tensor(P, P)\n"
      "query validate(P)\n";
  auto run = [&] {
    return format_report(execute_script(parse_script(text)),
                         ReportMode::machine);
  };
  std::string report = run();
  CHECK(report == run());
  CHECK(report.find("1\tdim_tensor\tok\t3\t") == 0);
  CHECK(report.find("q1=0 q=M p1=0 p=M") != std::string::npos);
  CHECK(report.find("2\tvalidate\tok\tok\t-") != std::string::npos);
}

TEST_CASE("text reports always carry a header") {
  std::string empty = format_report({}, ReportMode::text);
  CHECK(empty.find("id") == 0);
  CHECK(empty.find('\n') != std::string::npos);
}

TEST_CASE("every query name dispatches") {
  // one query of each name, all against compatible bindings
  std::string text =
      "algebra C = ring(x, y) / ideal(y^2 - x^3) prime\n"
      "profile F = field(2)\n"
      "profile G = fg_domain(2)\n"
      "profile P = pullback_field(r = 1)\n"
      "query dim(C)\n"
      "query height(C)\n"
      "query groebner(C)\n"
      "query dim_tensor(G, P)\n"
      "query dim_tensor_af(G, F)\n"
      "query dim_tensor_fields(2, 3)\n"
      "query wadsworth_D(2, 1, G)\n"
      "query ht_mixed(G, P, node(1), max)\n"
      "query gsct(G, P, node(1), max, 0)\n"
      "query sct(G, P, max, 1)\n"
      "query ht_min_ext(G, P, max)\n"
      "query onedim_ht(P, G, max, node(1), 0)\n"
      "query af(G)\n"
      "query afn(P, 1)\n"
      "query locally_jaffard(F)\n"
      "query validate(P)\n";
  auto records = execute_script(parse_script(text));
  REQUIRE(records.size() == 16);
  for (const auto& r : records) {
    CAPTURE(r.op);
    CHECK(!r.refused);
  }
}
