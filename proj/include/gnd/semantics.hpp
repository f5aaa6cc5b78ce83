#ifndef GND_SEMANTICS_HPP
#define GND_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gnd/script.hpp"

namespace gnd {

// Total assignment for the variables it is queried with.
using Valuation = std::map<std::string, bool>;

// Classical evaluation; throws std::out_of_range on an unbound variable.
bool evaluate(const Fptr& f, const Valuation& v);

// nullopt = valid; otherwise the first falsifying valuation, sweeping the
// variables (first occurrence first, most significant) with false < true.
std::optional<Valuation> tautology(const Fptr& f);
std::optional<Valuation> sequent_valid(const Sequent& s);

// Variables of a sequent: union over members, first-occurrence order.
std::vector<std::string> vars_of(const Sequent& s);

std::string print_valuation(const Valuation& v);

}  // namespace gnd

#endif
