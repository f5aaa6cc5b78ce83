#include "doctest.h"
#include "gnd/kernel.hpp"
#include "gnd/parse.hpp"
#include "helpers.hpp"

using namespace gnd;

namespace {

ProofScript script_of(const std::string& text) { return parse_script(text); }

bool accepted(const std::string& text) { return check_script(script_of(text)).accepted; }

}  // namespace

TEST_CASE("rule availability per system") {
  CHECK(primitive_in_system(SystemId::G, "raa"));
  CHECK(!primitive_in_system(SystemId::G, "raa-bot"));
  CHECK(primitive_in_system(SystemId::GBot, "raa-bot"));
  CHECK(!primitive_in_system(SystemId::GBot, "raa"));
  CHECK(primitive_in_system(SystemId::C, "cut"));
  CHECK(!primitive_in_system(SystemId::C, "imp-intro"));
  CHECK(macro_in_system(SystemId::G, "case"));
  CHECK(!macro_in_system(SystemId::C, "case"));
  CHECK(!macro_in_system(SystemId::GBot, "dne"));
  CHECK(macro_in_system(SystemId::C, "c-imp-intro"));
  CHECK(!known_rule("modus-ponens"));
}

TEST_CASE("golden derivations are accepted") {
  const char* files[] = {"scripts/g_pseudo1.gnd",    "scripts/g_pseudo2.gnd",
                         "scripts/g_dne.gnd",        "scripts/g_weak_raa.gnd",
                         "scripts/g_excontra.gnd",   "scripts/g_contraction.gnd",
                         "scripts/c_imp_intro.gnd",  "scripts/c_imp_elim.gnd"};
  for (const char* f : files) {
    CheckReport r = check_script(parse_script(gnd_tests::slurp(f)));
    INFO(f);
    CHECK(r.accepted);
  }
}

TEST_CASE("imp-elim is additive, not multiplicative") {
  CHECK(!accepted("system: G\n"
                  "1. p -> p ; premise\n"
                  "2. q -> p => q ; premise\n"
                  "3. q, p -> q ; imp-elim 1 2\n"));
  CHECK(accepted("system: G\n"
                 "1. p -> p ; premise\n"
                 "2. p -> p => q ; premise\n"
                 "3. p -> q ; imp-elim 1 2\n"));
}

TEST_CASE("raa needs the exact syntactic negation, last in the antecedent") {
  // succedents not exact negations of each other
  CHECK(!accepted("system: G\n"
                  "1. r, ~p -> ~q ; premise\n"
                  "2. r, ~p -> q ; premise\n"
                  "3. r -> p ; raa 1 2\n"));
  // same pair in the right order is fine
  CHECK(accepted("system: G\n"
                 "1. r, ~p -> q ; premise\n"
                 "2. r, ~p -> ~q ; premise\n"
                 "3. r -> p ; raa 1 2\n"));
  // discharged formula must be the last element
  CHECK(!accepted("system: G\n"
                  "1. ~p, r -> q ; premise\n"
                  "2. ~p, r -> ~q ; premise\n"
                  "3. r -> p ; raa 1 2\n"));
  // ~~p discharges to ~p, not to p
  CHECK(!accepted("system: G\n"
                  "1. ~~p -> q ; premise\n"
                  "2. ~~p -> ~q ; premise\n"
                  "3. -> p ; raa 1 2\n"));
  CHECK(accepted("system: G\n"
                 "1. ~~p -> q ; premise\n"
                 "2. ~~p -> ~q ; premise\n"
                 "3. -> ~p ; raa 1 2\n"));
}

TEST_CASE("imp-intro discharges exactly the last antecedent element") {
  CHECK(accepted("system: G\n"
                 "1. p, q -> p ; premise\n"
                 "2. p -> q => p ; imp-intro 1\n"));
  CHECK(!accepted("system: G\n"
                  "1. p, q -> p ; premise\n"
                  "2. q -> p => p ; imp-intro 1\n"));
  CHECK(!accepted("system: G\n"
                  "1. -> p ; premise\n"
                  "2. -> q => p ; imp-intro 1\n"));
}

TEST_CASE("thinning inserts one formula at one end") {
  CHECK(accepted("system: G\n"
                 "1. p -> p ; axiom\n"
                 "2. q, p -> p ; thin-front 1\n"
                 "3. q, p, r -> p ; thin-back 2\n"));
  CHECK(!accepted("system: G\n"
                  "1. p -> p ; axiom\n"
                  "2. p, q -> p ; thin-front 1\n"));  // wrong end
  CHECK(!accepted("system: G\n"
                  "1. p -> p ; axiom\n"
                  "2. q, r, p -> p ; thin-front 1\n"));  // two at once
}

TEST_CASE("axiom shape") {
  CHECK(accepted("system: G\n1. p => q -> p => q ; axiom\n"));
  CHECK(!accepted("system: G\n1. p -> q ; axiom\n"));
  CHECK(!accepted("system: G\n1. p, p -> p ; axiom\n"));
}

TEST_CASE("rules outside the system are gated") {
  CHECK(!accepted("system: GBot\n"
                  "1. p => #, p -> # ; premise\n"
                  "2. p => # -> # ; raa 1 1\n"));
  CHECK(accepted("system: GBot\n"
                 "1. p, p => # -> # ; premise\n"
                 "2. p -> p ; raa-bot 1\n"));
  CHECK(!accepted("system: G\n"
                  "1. q -> p ; premise\n"
                  "2. r, p -> p ; premise\n"
                  "3. r, q -> p ; cut 1 2\n"));  // cut is a C primitive only
}

TEST_CASE("C primitives: cut, conjunction rules, raa-short") {
  CHECK(accepted("system: C\n"
                 "1. r -> p ; premise\n"
                 "2. q, p -> p . p ; premise\n"
                 "3. q, r -> p . p ; cut 1 2\n"));
  CHECK(!accepted("system: C\n"
                  "1. r, q -> p ; premise\n"   // cut's first premise must be a singleton
                  "2. q, p -> p ; premise\n"
                  "3. q, r, q -> p ; cut 1 2\n"));
  CHECK(accepted("system: C\n"
                 "1. r -> p ; premise\n"
                 "2. r -> q ; premise\n"
                 "3. r -> p . q ; conj-intro 1 2\n"
                 "4. r -> p ; conj-elim-l 3\n"
                 "5. r -> q ; conj-elim-r 3\n"));
  CHECK(accepted("system: C\n"
                 "1. r, ~p -> q . ~q ; premise\n"
                 "2. r -> p ; raa-short 1\n"));
  CHECK(!accepted("system: C\n"
                  "1. r, ~p -> q . ~p ; premise\n"
                  "2. r -> p ; raa-short 1\n"));
}

TEST_CASE("violations carry line numbers and all are reported") {
  CheckReport r = check_script(script_of("system: G\n"
                                         "1. p -> q ; axiom\n"
                                         "2. r, p -> q ; thin-back 1\n"
                                         "3. r -> p ; raa 2 2\n"));
  CHECK(!r.accepted);
  REQUIRE(r.violations.size() >= 2);
  CHECK(r.violations[0].line == 1);
  CHECK(r.render().find("REJECTED") != std::string::npos);
}

TEST_CASE("macro-mode scripts admit catalogued macros only") {
  CHECK(accepted("system: G\nmode: macro\n"
                 "1. r, p, q -> p ; proj\n"
                 "2. r, q, p -> p ; perm 1\n"
                 "3. r, q -> p => p ; imp-intro 2\n"));
  CHECK(!accepted("system: C\nmode: macro\n"
                  "1. r, q -> p ; premise\n"
                  "2. q, r -> p ; perm 1\n"));  // perm is not available in C
  // macro tokens are rejected in strict mode
  CHECK(!accepted("system: G\nmode: strict\n"
                  "1. r, p -> p ; proj\n"));
  // a macro line with a wrong conclusion is rejected
  CHECK(!accepted("system: G\nmode: macro\n"
                  "1. p -> p ; axiom\n"
                  "2. q, p -> q ; thin 1\n"));
}
