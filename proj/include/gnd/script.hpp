#ifndef GND_SCRIPT_HPP
#define GND_SCRIPT_HPP

#include <string>
#include <vector>

#include "gnd/formula.hpp"

namespace gnd {

struct Sequent {
  std::vector<Fptr> antecedent;  // ordered, duplicates significant
  Fptr succedent;

  bool operator==(const Sequent& o) const {
    if (!same(succedent, o.succedent)) return false;
    if (antecedent.size() != o.antecedent.size()) return false;
    for (size_t i = 0; i < antecedent.size(); ++i)
      if (!same(antecedent[i], o.antecedent[i])) return false;
    return true;
  }
};

struct Justification {
  std::string rule;
  std::vector<int> premises;  // line numbers, strictly earlier
};

struct ProofLine {
  int number = 0;
  Sequent sequent;
  Justification just;
};

enum class Mode { Strict, Macro };

struct ProofScript {
  SystemId system = SystemId::G;
  Mode mode = Mode::Macro;
  std::vector<ProofLine> lines;

  bool is_theorem_script() const {
    for (const auto& l : lines)
      if (l.just.rule == "premise") return false;
    return true;
  }
};

// Hilbert-style scripts (systems HLT, HL3).
struct HilbertJust {
  enum Kind { Ax1, Ax2, Ax3, Ax3Prime, Hyp, Mp } kind = Ax1;
  int ref_a = 0;  // Hyp: hypothesis index; Mp: line of A
  int ref_b = 0;  // Mp: line of A=>B
};

struct HilbertLine {
  int number = 0;
  Fptr formula;
  HilbertJust just;
};

struct HilbertScript {
  SystemId system = SystemId::HL3;
  std::vector<Fptr> hypotheses;
  std::vector<HilbertLine> lines;
};

}  // namespace gnd

#endif
