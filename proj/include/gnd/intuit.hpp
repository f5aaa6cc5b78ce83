#ifndef GND_INTUIT_HPP
#define GND_INTUIT_HPP

#include "gnd/formula.hpp"

namespace gnd {

// Decides intuitionistic propositional validity over {Var, Neg, Imp, Conj,
// Falsum}; negation is rewritten to Imp(., Falsum) before the search. Total:
// the backward search runs in a calculus whose rules strictly decrease a
// multiset measure, so no loop checking is needed.
bool int_provable(const Fptr& f);

// Neg a -> Imp(a, Falsum), recursively (exposed for the translators/tests).
Fptr eliminate_negation(const Fptr& f);

}  // namespace gnd

#endif
