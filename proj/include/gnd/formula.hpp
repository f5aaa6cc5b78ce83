#ifndef GND_FORMULA_HPP
#define GND_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

namespace gnd {

enum class Conn { Var, Neg, Imp, Conj, Falsum };

class Formula;
using Fptr = std::shared_ptr<const Formula>;

// Interned immutable formula tree. Factories return the canonical node for a
// given shape, so structural equality is pointer equality.
class Formula {
 public:
  Conn kind;
  std::string name;  // Var only
  Fptr lhs;          // Neg body / left operand
  Fptr rhs;          // right operand

  static Fptr var(const std::string& name);
  static Fptr neg(Fptr body);
  static Fptr imp(Fptr left, Fptr right);
  static Fptr conj(Fptr left, Fptr right);
  static Fptr falsum();

 private:
  Formula(Conn k, std::string n, Fptr l, Fptr r)
      : kind(k), name(std::move(n)), lhs(std::move(l)), rhs(std::move(r)) {}
  static Fptr intern(Conn k, const std::string& n, const Fptr& l, const Fptr& r);
};

inline bool same(const Fptr& a, const Fptr& b) { return a.get() == b.get(); }

// Variables in first-occurrence order, duplicates removed.
void collect_vars(const Fptr& f, std::vector<std::string>& out);
std::vector<std::string> vars_of(const Fptr& f);

// Node count of the syntax tree.
int node_count(const Fptr& f);

enum class SystemId { G, GBot, C, HLT, HL3 };

const char* system_name(SystemId s);
bool parse_system_name(const std::string& text, SystemId& out);
bool is_sequent_system(SystemId s);

// True iff every node of f uses a constructor admitted by the system's alphabet.
bool in_alphabet(SystemId s, const Fptr& f);

}  // namespace gnd

#endif
