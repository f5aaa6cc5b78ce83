#include "doctest.h"
#include "gnd/completeness.hpp"
#include "gnd/derived.hpp"
#include "gnd/hilbert.hpp"
#include "gnd/parse.hpp"
#include "gnd/semantics.hpp"
#include "helpers.hpp"

using namespace gnd;

TEST_CASE("schema matching") {
  CHECK(matches_schema(HilbertJust::Ax1, parse_formula("p => q => p")));
  CHECK(matches_schema(HilbertJust::Ax1, parse_formula("~p => (q => r) => ~p")));
  CHECK(!matches_schema(HilbertJust::Ax1, parse_formula("p => q => q")));
  CHECK(matches_schema(HilbertJust::Ax2,
                       parse_formula("(p => q => r) => (p => q) => p => r")));
  CHECK(!matches_schema(HilbertJust::Ax2,
                        parse_formula("(p => q => r) => (p => q) => q => r")));
  CHECK(matches_schema(HilbertJust::Ax3, parse_formula("(~p => ~q) => q => p")));
  CHECK(!matches_schema(HilbertJust::Ax3, parse_formula("(p => q) => ~q => ~p")));
  CHECK(matches_schema(HilbertJust::Ax3Prime,
                       parse_formula("(~p => q) => (~p => ~q) => p")));
  CHECK(!matches_schema(HilbertJust::Ax3Prime,
                        parse_formula("(~p => q) => (~q => ~q) => p")));
  // matching is schematic: metavariables may be instantiated by anything
  CHECK(matches_schema(HilbertJust::Ax3, parse_formula("(~~q => ~(p => p)) => (p => p) => ~q")));
}

TEST_CASE("check_hilbert accepts a hand proof and rejects mutations") {
  std::string good =
      "system: HLT\n"
      "hyp: p => q\n"
      "hyp: p\n"
      "1. p ; hyp 2\n"
      "2. p => q ; hyp 1\n"
      "3. q ; mp 1 2\n";
  CHECK(check_hilbert(parse_hilbert_script(good)).accepted);
  // mp referencing the wrong lines
  std::string bad =
      "system: HLT\n"
      "hyp: p => q\n"
      "hyp: p\n"
      "1. p ; hyp 2\n"
      "2. p => q ; hyp 1\n"
      "3. q ; mp 2 1\n";
  CHECK(!check_hilbert(parse_hilbert_script(bad)).accepted);
  // ax3' is not an HLT axiom, and ax3 is not an HL3 axiom
  CHECK(!check_hilbert(parse_hilbert_script(
                           "system: HLT\n1. (~p => q) => (~p => ~q) => p ; ax3'\n"))
             .accepted);
  CHECK(!check_hilbert(parse_hilbert_script("system: HL3\n1. (~p => ~q) => q => p ; ax3\n"))
             .accepted);
  // formula must be a real instance
  CHECK(!check_hilbert(parse_hilbert_script("system: HLT\n1. p => q => q ; ax1\n")).accepted);
}

TEST_CASE("deduction theorem discharges the last hypothesis") {
  std::string text =
      "system: HLT\n"
      "hyp: p => q\n"
      "hyp: q => r\n"
      "hyp: p\n"
      "1. p ; hyp 3\n"
      "2. p => q ; hyp 1\n"
      "3. q ; mp 1 2\n"
      "4. q => r ; hyp 2\n"
      "5. r ; mp 3 4\n";
  HilbertScript s = parse_hilbert_script(text);
  HilbertScript d1 = deduction_theorem(s);
  CHECK(check_hilbert(d1).accepted);
  CHECK(d1.hypotheses.size() == 2);
  CHECK(print_formula(d1.lines.back().formula) == "p => r");
  HilbertScript d3 = deduction_theorem(deduction_theorem(d1));
  CHECK(check_hilbert(d3).accepted);
  CHECK(d3.hypotheses.empty());
  CHECK(print_formula(d3.lines.back().formula) == "(p => q) => (q => r) => p => r");
  CHECK(!tautology(d3.lines.back().formula));
  CHECK_THROWS_AS(deduction_theorem(d3), ElaborationError);
}

TEST_CASE("each negation axiom derives the other") {
  Fptr p = Formula::var("p"), q = Formula::var("q");
  HilbertScript a = derive_ax3_in_hl3(p, q);
  CHECK(a.system == SystemId::HL3);
  CHECK(a.hypotheses.empty());
  CHECK(check_hilbert(a).accepted);
  CHECK(matches_schema(HilbertJust::Ax3, a.lines.back().formula));

  HilbertScript b = derive_ax3prime_in_hlt(p, q);
  CHECK(b.system == SystemId::HLT);
  CHECK(b.hypotheses.empty());
  CHECK(check_hilbert(b).accepted);
  CHECK(matches_schema(HilbertJust::Ax3Prime, b.lines.back().formula));

  // at a compound instance too
  HilbertScript c = derive_ax3_in_hl3(Formula::imp(p, q), Formula::neg(q));
  CHECK(check_hilbert(c).accepted);
  CHECK(matches_schema(HilbertJust::Ax3, c.lines.back().formula));
}

TEST_CASE("shipped interderivability scripts") {
  HilbertScript a = parse_hilbert_script(gnd_tests::slurp("scripts/hl3_derives_ax3.gnd"));
  CHECK(check_hilbert(a).accepted);
  CHECK(print_formula(a.lines.back().formula) == "(~p => ~q) => q => p");
  HilbertScript b = parse_hilbert_script(gnd_tests::slurp("scripts/hlt_derives_ax3p.gnd"));
  CHECK(check_hilbert(b).accepted);
  CHECK(print_formula(b.lines.back().formula) == "(~p => q) => (~p => ~q) => p");
  // the route goes through the lemma ~q => (q => ~(p => p))
  bool lemma_found = false;
  Fptr lemma = parse_formula("~q => q => ~(p => p)");
  for (const auto& l : b.lines) lemma_found = lemma_found || same(l.formula, lemma);
  CHECK(lemma_found);
}

TEST_CASE("hilbert_to_g lifts a Hilbert proof into G") {
  HilbertScript s = parse_hilbert_script(
      "system: HL3\n"
      "hyp: ~p => q\n"
      "hyp: ~p => ~q\n"
      "1. ~p => q ; hyp 1\n"
      "2. (~p => q) => (~p => ~q) => p ; ax3'\n"
      "3. (~p => ~q) => p ; mp 1 2\n"
      "4. ~p => ~q ; hyp 2\n"
      "5. p ; mp 4 3\n");
  REQUIRE(check_hilbert(s).accepted);
  ProofScript g = hilbert_to_g(s);
  CHECK(check_script(g).accepted);
  CHECK(print_sequent(g.lines.back().sequent) == "~p => q, ~p => ~q -> p");
  ProofScript strict = elaborate_script(g);
  CHECK(check_script(strict).accepted);
}

TEST_CASE("g_to_hilbert round trip on theorems") {
  for (const char* text : {"-> p => p", "-> ~~p => p", "-> (p => q) => ~q => ~p"}) {
    Sequent s = parse_sequent(text);
    ProofScript g = *prove(s).script;
    HilbertScript h = g_to_hilbert(g);
    INFO(text);
    CHECK(h.system == SystemId::HL3);
    CHECK(h.hypotheses.empty());
    CHECK(check_hilbert(h).accepted);
    CHECK(same(h.lines.back().formula, s.succedent));
    ProofScript back = hilbert_to_g(h);
    CHECK(check_script(back).accepted);
    CHECK(back.lines.back().sequent == s);
  }
}

TEST_CASE("g_to_hilbert refuses hypothetical premise lines") {
  ProofScript s = parse_script(
      "system: G\nmode: strict\n"
      "1. r -> q ; premise\n");
  CHECK_THROWS_AS(g_to_hilbert(s), ElaborationError);
}
