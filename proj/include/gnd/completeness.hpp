#ifndef GND_COMPLETENESS_HPP
#define GND_COMPLETENESS_HPP

#include <optional>

#include "gnd/semantics.hpp"

namespace gnd {

// Proves `literals(v) -> f` when f is true under v, else `literals(v) -> ~f`,
// where literals(v) lists x or ~x for each variable of v's domain in sorted
// order. Macro-mode G script, accepted by the kernel.
ProofScript kalmar_line(const Fptr& f, const Valuation& v);

struct ProveResult {
  std::optional<ProofScript> script;
  std::optional<Valuation> countermodel;
};

// Synthesizes an accepted macro-mode G proof of `s`, or returns the semantics
// countermodel when s is invalid. The input must be in G's alphabet.
ProveResult prove(const Sequent& s);

}  // namespace gnd

#endif
