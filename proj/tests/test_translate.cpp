#include "doctest.h"
#include "gnd/completeness.hpp"
#include "gnd/derived.hpp"
#include "gnd/kernel.hpp"
#include "gnd/parse.hpp"
#include "gnd/semantics.hpp"
#include "gnd/translate.hpp"
#include "helpers.hpp"

using namespace gnd;

TEST_CASE("formula maps") {
  CHECK(print_formula(translate_formula(TranslationId::GtoC, parse_formula("p => q"))) ==
        "~(p . ~q)");
  CHECK(print_formula(translate_formula(TranslationId::GtoC, parse_formula("~p => ~~q"))) ==
        "~(~p . ~~~q)");
  CHECK(print_formula(translate_formula(TranslationId::CtoG, parse_formula("p . q"))) ==
        "~(p => ~q)");
  CHECK(print_formula(translate_formula(TranslationId::GtoGBot, parse_formula("~p"))) ==
        "p => #");
  CHECK(print_formula(translate_formula(TranslationId::GtoGBot, parse_formula("~~p => q"))) ==
        "((p => #) => #) => q");
  CHECK(print_formula(translate_formula(TranslationId::GBotToG, parse_formula("#"))) ==
        "~(p => p)");
  CHECK(print_formula(translate_formula(TranslationId::GBotToG, parse_formula("q => #"))) ==
        "q => ~(p => p)");
}

TEST_CASE("formula maps reject out-of-alphabet input") {
  CHECK_THROWS_AS(translate_formula(TranslationId::GtoC, parse_formula("p . q")),
                  ElaborationError);
  CHECK_THROWS_AS(translate_formula(TranslationId::CtoG, parse_formula("p => q")),
                  ElaborationError);
  CHECK_THROWS_AS(translate_formula(TranslationId::GtoGBot, parse_formula("#")),
                  ElaborationError);
  CHECK_THROWS_AS(translate_formula(TranslationId::GBotToG, parse_formula("~p")),
                  ElaborationError);
}

TEST_CASE("translation selection") {
  TranslationId t;
  CHECK(translation_for(SystemId::G, SystemId::C, t));
  CHECK(t == TranslationId::GtoC);
  CHECK(translation_for(SystemId::GBot, SystemId::G, t));
  CHECK(t == TranslationId::GBotToG);
  CHECK(!translation_for(SystemId::C, SystemId::GBot, t));
  CHECK(!translation_for(SystemId::G, SystemId::G, t));
}

TEST_CASE("formula maps preserve truth tables") {
  std::mt19937 rng(5150);
  for (int i = 0; i < 150; ++i) {
    Fptr f = gnd_tests::random_formula(rng, 4, {"p", "q"}, "ni");
    Fptr c = translate_formula(TranslationId::GtoC, f);
    Fptr gb = translate_formula(TranslationId::GtoGBot, f);
    for (int bits = 0; bits < 4; ++bits) {
      Valuation v{{"p", (bits & 1) != 0}, {"q", (bits & 2) != 0}};
      CHECK(evaluate(f, v) == evaluate(c, v));
      CHECK(evaluate(f, v) == evaluate(gb, v));
    }
  }
}

TEST_CASE("proof translation into each neighbouring system") {
  for (const char* text : {"-> ~~p => p", "p, p => q -> q", "~p -> p => q"}) {
    Sequent s = parse_sequent(text);
    ProofScript g = *prove(s).script;
    for (TranslationId t : {TranslationId::GtoC, TranslationId::GtoGBot}) {
      INFO(text);
      ProofScript out = translate_proof(t, g);
      CHECK(out.system == translation_target(t));
      CHECK(check_script(out).accepted);
      CHECK(out.lines.back().sequent == translate_sequent(t, s));
    }
  }
}

TEST_CASE("round trips through C and GBot") {
  Sequent s = parse_sequent("-> (p => q) => ~q => ~p");
  ProofScript g = *prove(s).script;
  ProofScript c = translate_proof(TranslationId::GtoC, g);
  ProofScript back = translate_proof(TranslationId::CtoG, c);
  CHECK(check_script(back).accepted);
  Sequent expect = translate_sequent(TranslationId::CtoG, translate_sequent(TranslationId::GtoC, s));
  CHECK(back.lines.back().sequent == expect);
  // the round-tripped conclusion is classically equivalent to the original
  CHECK(!tautology(Formula::imp(expect.succedent, s.succedent)));
  CHECK(!tautology(Formula::imp(s.succedent, expect.succedent)));

  ProofScript gb = translate_proof(TranslationId::GtoGBot, g);
  ProofScript back2 = translate_proof(TranslationId::GBotToG, gb);
  CHECK(check_script(back2).accepted);
  Sequent expect2 =
      translate_sequent(TranslationId::GBotToG, translate_sequent(TranslationId::GtoGBot, s));
  CHECK(back2.lines.back().sequent == expect2);
  CHECK(!tautology(Formula::imp(expect2.succedent, s.succedent)));
}

TEST_CASE("macro-mode sources are elaborated before mapping") {
  ProofScript s = parse_script(gnd_tests::slurp("scripts/g_weak_raa.gnd"));
  ProofScript out = translate_proof(TranslationId::GtoC, s);
  CHECK(check_script(out).accepted);
  CHECK(out.lines.back().sequent ==
        translate_sequent(TranslationId::GtoC, s.lines.back().sequent));
}
