#ifndef GND_KERNEL_HPP
#define GND_KERNEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gnd/script.hpp"

namespace gnd {

struct Violation {
  int line = 0;
  std::string kind;    // context-mismatch | wrong-shape | rule-not-in-system | ...
  std::string detail;
};

struct CheckReport {
  bool accepted = false;
  std::vector<Violation> violations;
  std::map<std::string, int> rule_counts;

  std::string render() const;
};

// Is `rule` a primitive rule token of `system`?
bool primitive_in_system(SystemId system, const std::string& rule);
// Is `rule` a derived-rule (macro) token available in `system`?
bool macro_in_system(SystemId system, const std::string& rule);
// Known anywhere (used to distinguish unknown tokens from gating errors).
bool known_rule(const std::string& rule);
bool known_macro(const std::string& rule);

// Checks one primitive rule application. `established[i]` holds the sequent of
// line i+1; premise references in `just` index into it.
std::optional<Violation> check_step(SystemId system, const std::vector<Sequent>& established,
                                    const Sequent& conclusion, const Justification& just,
                                    int line_number);

// Line-by-line check. Strict mode admits primitive rules only; macro mode also
// admits catalogued derived-rule tokens, each verified by elaborating it and
// kernel-checking the expansion. Reports every violation.
CheckReport check_script(const ProofScript& script);

}  // namespace gnd

#endif
