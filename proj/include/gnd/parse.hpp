#ifndef GND_PARSE_HPP
#define GND_PARSE_HPP

#include <stdexcept>
#include <string>

#include "gnd/script.hpp"

namespace gnd {

// Thrown on malformed input; `where` is a 1-based line:column position when it
// refers to a single-line input, or "line N" for script files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, const std::string& where)
      : std::runtime_error(where.empty() ? msg : where + ": " + msg) {}
};

// Concrete grammar:
//   formula := imp ; imp := conj ("=>" imp)? ; conj := unary (("."|"&") unary)* ;
//   unary := "~" unary | atom ; atom := VAR | "#" | "(" formula ")"
// Sequent: [formula ("," formula)*] "->" formula.
Fptr parse_formula(const std::string& input);
Sequent parse_sequent(const std::string& input);

// Minimal-parenthesization printers; parse(print(x)) == x.
std::string print_formula(const Fptr& f);
std::string print_sequent(const Sequent& s);

// Script files (see README for the layout). Checks alphabet membership,
// consecutive numbering and backward references; does not check rules.
ProofScript parse_script(const std::string& input);
std::string print_script(const ProofScript& s);

HilbertScript parse_hilbert_script(const std::string& input);
std::string print_hilbert_script(const HilbertScript& s);

// Peeks at the `system:` header to tell sequent scripts from Hilbert ones.
bool script_is_hilbert(const std::string& input);

}  // namespace gnd

#endif
