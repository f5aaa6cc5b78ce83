#ifndef GND_DERIVED_HPP
#define GND_DERIVED_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "gnd/script.hpp"

namespace gnd {

struct ElaborationError : std::runtime_error {
  std::string kind;
  std::string detail;
  ElaborationError(std::string k, std::string d)
      : std::runtime_error(k + ": " + d), kind(std::move(k)), detail(std::move(d)) {}
};

struct MacroInstance {
  std::string rule;
  std::vector<Sequent> premises;
  Sequent conclusion;
};

// Accumulates a script line by line. Primitive emitters run check_step on
// every line they add and throw ElaborationError("internal", ...) on a
// violation, so anything a builder produces is kernel-audited. Emitters
// return the 1-based line number of what they added.
class ProofBuilder {
 public:
  explicit ProofBuilder(SystemId system, Mode mode = Mode::Strict)
      : system_(system), mode_(mode) {}

  int premise(const Sequent& s);
  int axiom(const Fptr& p);
  int thin_front(int line, const Fptr& p);
  int thin_back(int line, const Fptr& p);
  int imp_intro(int line);
  int imp_elim(int line_p, int line_imp);
  int raa(int line_q, int line_nq);
  int raa_bot(int line);
  int conj_intro(int line_p, int line_q);
  int conj_elim_l(int line);
  int conj_elim_r(int line);
  int cut(int line_singleton, int line_main);
  int raa_short(int line);

  // Emits a derived-rule line. In a Macro-mode builder the token is recorded
  // as-is; in a Strict-mode builder it is expanded into primitive lines.
  int macro(const std::string& rule, const std::vector<int>& prem_lines,
            const Sequent& conclusion);

  // Emits a primitive rule line with an explicitly given sequent.
  int primitive(const Sequent& s, const std::string& rule, std::vector<int> prems);

  const Sequent& sequent_of(int line) const;
  int last_line() const { return static_cast<int>(lines_.size()); }
  SystemId system() const { return system_; }
  Mode mode() const { return mode_; }
  ProofScript take_script();
  const std::vector<ProofLine>& lines() const { return lines_; }

 private:
  int emit(const Sequent& s, const std::string& rule, std::vector<int> prems);
  SystemId system_;
  Mode mode_;
  std::vector<ProofLine> lines_;
  std::vector<Sequent> established_;  // mirror of lines_ for check_step
};

// Expands one macro application into primitive lines appended to `b`; the
// cited premise lines must already be in `b`. Returns the line concluding
// `conclusion` (throws if the macro cannot produce it).
int expand_macro(ProofBuilder& b, const std::string& rule, const std::vector<int>& prem_lines,
                 const Sequent& conclusion);

// Returns the macro's premises (justified `premise`) followed by its primitive
// expansion; the result is a valid strict hypothetical script whose final
// sequent is the declared conclusion.
std::vector<ProofLine> elaborate_step(SystemId system, const MacroInstance& m);

// Whole-script expansion: macro lines of an accepted macro-mode script are
// replaced by their primitive expansions, renumbering throughout. Identity on
// macro-free input.
ProofScript elaborate_script(const ProofScript& script);

}  // namespace gnd

#endif
