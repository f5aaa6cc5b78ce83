#include "doctest.h"
#include "gnd/parse.hpp"
#include "helpers.hpp"

using namespace gnd;
using gnd_tests::random_formula;

TEST_CASE("precedence and associativity") {
  Fptr p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");
  CHECK(same(parse_formula("~p . q => r"), Formula::imp(Formula::conj(Formula::neg(p), q), r)));
  CHECK(same(parse_formula("p => q => r"), Formula::imp(p, Formula::imp(q, r))));
  CHECK(same(parse_formula("p . q . r"), Formula::conj(Formula::conj(p, q), r)));
  CHECK(same(parse_formula("p & q"), parse_formula("p . q")));
  CHECK(same(parse_formula("~~#"), Formula::neg(Formula::neg(Formula::falsum()))));
  CHECK(same(parse_formula("(p => q) => r"), Formula::imp(Formula::imp(p, q), r)));
}

TEST_CASE("printer emits minimal parentheses") {
  CHECK(print_formula(parse_formula("(p=>q)=>r")) == "(p => q) => r");
  CHECK(print_formula(parse_formula("p=>(q=>r)")) == "p => q => r");
  CHECK(print_formula(parse_formula("~(p.q)")) == "~(p . q)");
  CHECK(print_formula(parse_formula("~p.q")) == "~p . q");
  CHECK(print_formula(parse_formula("p.(q.r)")) == "p . (q . r)");
  CHECK(print_formula(parse_formula("(p.q).r")) == "p . q . r");
  CHECK(print_formula(parse_formula("(p=>q).r")) == "(p => q) . r");
}

TEST_CASE("parse/print round trips on random formulas") {
  std::mt19937 rng(20260826);
  std::vector<std::string> vars = {"p", "q", "r"};
  for (int i = 0; i < 500; ++i) {
    Fptr f = random_formula(rng, 5, vars, "nicf");
    CHECK(same(parse_formula(print_formula(f)), f));
  }
}

TEST_CASE("sequent round trips") {
  const char* samples[] = {"-> p", "p -> p", "p, q => r, ~p -> q . r", "# -> p"};
  for (const char* s : samples) {
    Sequent seq = parse_sequent(s);
    CHECK(print_sequent(seq) == s);
    CHECK(parse_sequent(print_sequent(seq)) == seq);
  }
}

TEST_CASE("malformed inputs raise ParseError") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p =>"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("P"), ParseError);  // variables are lowercase
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p -> q -> r"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p, -> q"), ParseError);
}

TEST_CASE("script headers and numbering are validated") {
  CHECK_THROWS_AS(parse_script("1. p -> p ; axiom\n"), ParseError);  // no system
  CHECK_THROWS_AS(parse_script("system: G\n2. p -> p ; axiom\n"), ParseError);
  CHECK_THROWS_AS(parse_script("system: G\n1. p -> p ; axiom\n3. p -> p ; axiom\n"), ParseError);
  CHECK_THROWS_AS(parse_script("system: G\n1. p -> p ; imp-elim 1 2\n"), ParseError);  // forward
  CHECK_THROWS_AS(parse_script("system: G\n1. p . q -> p ; axiom\n"), ParseError);  // alphabet
  CHECK_THROWS_AS(parse_script("system: GBot\n1. ~p -> p ; axiom\n"), ParseError);
  CHECK_THROWS_AS(parse_script("system: C\n1. p => q -> p ; axiom\n"), ParseError);
  CHECK_THROWS_AS(parse_script("system: HLT\n1. p -> p ; axiom\n"), ParseError);
  CHECK_THROWS_AS(parse_script("system: G\nsystem: G\n1. p -> p ; axiom\n"), ParseError);
  CHECK_THROWS_AS(parse_script("system: G\n1. p -> p ; axiom extra\n"), ParseError);
}

TEST_CASE("script parse/print round trip") {
  std::string text = gnd_tests::slurp("scripts/g_weak_raa.gnd");
  ProofScript s = parse_script(text);
  CHECK(s.system == SystemId::G);
  CHECK(s.mode == Mode::Macro);
  CHECK(s.lines.size() == 6);
  std::string printed = print_script(s);
  ProofScript again = parse_script(printed);
  CHECK(print_script(again) == printed);
}

TEST_CASE("hilbert scripts parse") {
  std::string text =
      "system: HLT\n"
      "hyp: p\n"
      "1. p ; hyp 1\n"
      "2. p => q => p ; ax1\n"
      "3. q => p ; mp 1 2\n";
  HilbertScript s = parse_hilbert_script(text);
  CHECK(s.hypotheses.size() == 1);
  CHECK(s.lines.size() == 3);
  CHECK(print_hilbert_script(s) == text);
  CHECK(script_is_hilbert(text));
  CHECK(!script_is_hilbert("system: G\n1. p -> p ; axiom\n"));
  CHECK_THROWS_AS(parse_hilbert_script("system: HLT\n1. p ; hyp 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hilbert_script("system: HLT\n1. p ; mp 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hilbert_script("system: G\n1. p -> p ; axiom\n"), ParseError);
}
