#ifndef GND_HILBERT_HPP
#define GND_HILBERT_HPP

#include "gnd/kernel.hpp"
#include "gnd/script.hpp"

namespace gnd {

// Schema matching for the axiom catalogue:
//   ax1  = P => (Q => P)
//   ax2  = (P => (Q => R)) => ((P => Q) => (P => R))
//   ax3  = (~P => ~Q) => (Q => P)          (HLT only)
//   ax3' = (~P => Q) => ((~P => ~Q) => P)  (HL3 only)
bool matches_schema(HilbertJust::Kind kind, const Fptr& f);

CheckReport check_hilbert(const HilbertScript& script);

// Discharges the last declared hypothesis P: from an accepted proof of Q under
// Gamma, P produces an accepted proof of P => Q under Gamma. The output never
// cites the discharged hypothesis.
HilbertScript deduction_theorem(const HilbertScript& script);

// Accepted G script concluding `hypotheses -> final formula`; axiom-schema
// instances are discharged by proofs synthesized with the completeness engine.
ProofScript hilbert_to_g(const HilbertScript& script);

// Accepted HL3 script with hypotheses = the distinct antecedent members of the
// G conclusion and final formula = its succedent. The input must be a
// premise-free accepted G script (macro lines are elaborated first).
HilbertScript g_to_hilbert(const ProofScript& script);

// The interderivability exercise: each system derives the other's negation
// axiom. The HLT derivation of ax3' goes through the lemma ~Q => (Q => ~(P => P)).
HilbertScript derive_ax3_in_hl3(const Fptr& p, const Fptr& q);
HilbertScript derive_ax3prime_in_hlt(const Fptr& p, const Fptr& q);

}  // namespace gnd

#endif
