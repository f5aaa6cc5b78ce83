#include "doctest.h"
#include "gnd/parse.hpp"
#include "gnd/semantics.hpp"
#include "helpers.hpp"

using namespace gnd;

TEST_CASE("evaluation basics") {
  Valuation v{{"p", true}, {"q", false}};
  CHECK(evaluate(parse_formula("p"), v));
  CHECK(!evaluate(parse_formula("q"), v));
  CHECK(!evaluate(parse_formula("~p"), v));
  CHECK(!evaluate(parse_formula("p => q"), v));
  CHECK(evaluate(parse_formula("q => p"), v));
  CHECK(!evaluate(parse_formula("p . q"), v));
  CHECK(!evaluate(parse_formula("#"), v));
  CHECK_THROWS_AS(evaluate(parse_formula("r"), v), std::out_of_range);
}

TEST_CASE("tautology and countermodels") {
  CHECK(!tautology(parse_formula("p => p")));
  CHECK(!tautology(parse_formula("((p => q) => p) => p")));  // Peirce
  CHECK(!tautology(parse_formula("~~p => p")));
  auto cm = tautology(parse_formula("p"));
  REQUIRE(cm);
  CHECK(print_valuation(*cm) == "p=F");
  cm = tautology(parse_formula("p => q"));
  REQUIRE(cm);
  CHECK(print_valuation(*cm) == "p=T q=F");
}

TEST_CASE("sequent validity and deterministic countermodel order") {
  CHECK(!sequent_valid(parse_sequent("p, p => q -> q")));
  CHECK(!sequent_valid(parse_sequent("# -> p")));
  auto cm = sequent_valid(parse_sequent("p . q -> q . r"));
  REQUIRE(cm);
  CHECK(print_valuation(*cm) == "p=T q=T r=F");
  // first-occurrence order decides significance: q scanned first here
  cm = sequent_valid(parse_sequent("q -> p"));
  REQUIRE(cm);
  CHECK(print_valuation(*cm) == "p=F q=T");
}

TEST_CASE("implication matches its negation-conjunction definition") {
  std::mt19937 rng(7);
  std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 200; ++i) {
    Fptr a = gnd_tests::random_formula(rng, 3, vars);
    Fptr b = gnd_tests::random_formula(rng, 3, vars);
    Fptr imp = Formula::imp(a, b);
    Fptr def = Formula::neg(Formula::conj(a, Formula::neg(b)));
    for (int bits = 0; bits < 4; ++bits) {
      Valuation v{{"p", (bits & 1) != 0}, {"q", (bits & 2) != 0}};
      CHECK(evaluate(imp, v) == evaluate(def, v));
    }
  }
}

TEST_CASE("vars_of uses first occurrence order") {
  auto vs = vars_of(parse_sequent("q, r -> p . q"));
  REQUIRE(vs.size() == 3);
  CHECK(vs[0] == "q");
  CHECK(vs[1] == "r");
  CHECK(vs[2] == "p");
}
