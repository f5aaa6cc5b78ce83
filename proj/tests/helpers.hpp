#ifndef GND_TESTS_HELPERS_HPP
#define GND_TESTS_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gnd/formula.hpp"

namespace gnd_tests {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Deterministic random formulas. `conns` selects the alphabet: any subset of
// "niocf" for Neg, Imp, cOnj, Falsum is spelled as e.g. "ni" (G), "if" (GBot),
// "nc" (C), "nicf" (everything).
inline gnd::Fptr random_formula(std::mt19937& rng, int depth, const std::vector<std::string>& vars,
                                const std::string& conns = "ni") {
  bool allow_falsum = conns.find('f') != std::string::npos;
  if (depth == 0) {
    if (allow_falsum && rng() % 8 == 0) return gnd::Formula::falsum();
    return gnd::Formula::var(vars[rng() % vars.size()]);
  }
  std::string ops = conns;
  ops.erase(std::remove(ops.begin(), ops.end(), 'f'), ops.end());
  ops += "a";  // atom, to vary the shape
  switch (ops[rng() % ops.size()]) {
    case 'n':
      return gnd::Formula::neg(random_formula(rng, depth - 1, vars, conns));
    case 'i':
      return gnd::Formula::imp(random_formula(rng, depth - 1, vars, conns),
                               random_formula(rng, depth - 1, vars, conns));
    case 'c':
      return gnd::Formula::conj(random_formula(rng, depth - 1, vars, conns),
                                random_formula(rng, depth - 1, vars, conns));
    default:
      return random_formula(rng, 0, vars, conns);
  }
}

// All formulas over `vars` with exactly `n` nodes, connectives from `conns`
// (same letters as above); memoize by calling repeatedly with a shared table.
inline const std::vector<gnd::Fptr>& formulas_of_size(
    int n, const std::vector<std::string>& vars, const std::string& conns,
    std::vector<std::vector<gnd::Fptr>>& table) {
  if (static_cast<int>(table.size()) > n && !table[n].empty()) return table[n];
  if (static_cast<int>(table.size()) <= n) table.resize(n + 1);
  std::vector<gnd::Fptr>& out = table[n];
  if (n == 1) {
    for (const auto& v : vars) out.push_back(gnd::Formula::var(v));
    if (conns.find('f') != std::string::npos) out.push_back(gnd::Formula::falsum());
    return out;
  }
  if (conns.find('n') != std::string::npos)
    for (const auto& f : formulas_of_size(n - 1, vars, conns, table))
      out.push_back(gnd::Formula::neg(f));
  for (int i = 1; i <= n - 2; ++i) {
    const auto& ls = formulas_of_size(i, vars, conns, table);
    const auto& rs = formulas_of_size(n - 1 - i, vars, conns, table);
    for (const auto& l : ls)
      for (const auto& r : rs) {
        if (conns.find('i') != std::string::npos) out.push_back(gnd::Formula::imp(l, r));
        if (conns.find('c') != std::string::npos) out.push_back(gnd::Formula::conj(l, r));
      }
  }
  return out;
}

}  // namespace gnd_tests

#endif
