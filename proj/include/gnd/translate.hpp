#ifndef GND_TRANSLATE_HPP
#define GND_TRANSLATE_HPP

#include "gnd/script.hpp"

namespace gnd {

enum class TranslationId { GtoC, CtoG, GtoGBot, GBotToG };

SystemId translation_source(TranslationId t);
SystemId translation_target(TranslationId t);
bool translation_for(SystemId from, SystemId to, TranslationId& out);

// Compositional formula maps:
//   GtoC:    P => Q  |->  ~(P' . ~Q')
//   GtoGBot: ~P      |->  P' => #
//   CtoG:    P . Q   |->  ~(P' => ~Q')
//   GBotToG: #       |->  ~(p => p)
// Throws ElaborationError("out-of-alphabet") on inputs outside the source
// alphabet.
Fptr translate_formula(TranslationId t, const Fptr& f);
Sequent translate_sequent(TranslationId t, const Sequent& s);

// Maps an accepted source-system proof, rule by rule, to an accepted
// macro-mode proof in the target system whose final sequent is the
// formula-wise translation of the source's. Macro-mode inputs are elaborated
// first so only primitive rules need mapping.
ProofScript translate_proof(TranslationId t, const ProofScript& script);

}  // namespace gnd

#endif
