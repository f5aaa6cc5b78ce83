#include "gnd/semantics.hpp"

#include <stdexcept>

namespace gnd {

bool evaluate(const Fptr& f, const Valuation& v) {
  switch (f->kind) {
    case Conn::Var: {
      auto it = v.find(f->name);
      if (it == v.end()) throw std::out_of_range("unbound variable '" + f->name + "'");
      return it->second;
    }
    case Conn::Neg: return !evaluate(f->lhs, v);
    case Conn::Imp: return !evaluate(f->lhs, v) || evaluate(f->rhs, v);
    case Conn::Conj: return evaluate(f->lhs, v) && evaluate(f->rhs, v);
    case Conn::Falsum: return false;
  }
  return false;
}

std::vector<std::string> vars_of(const Sequent& s) {
  std::vector<std::string> out;
  for (const auto& f : s.antecedent) collect_vars(f, out);
  collect_vars(s.succedent, out);
  return out;
}

namespace {

// Sweeps all valuations of `vars` (first variable most significant, false
// before true) and returns the first on which `falsified` holds.
template <typename Pred>
std::optional<Valuation> find_countermodel(const std::vector<std::string>& vars, Pred falsified) {
  size_t k = vars.size();
  for (uint64_t bits = 0; bits < (uint64_t(1) << k); ++bits) {
    Valuation v;
    for (size_t i = 0; i < k; ++i)
      v[vars[i]] = ((bits >> (k - 1 - i)) & 1) != 0;
    if (falsified(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Valuation> tautology(const Fptr& f) {
  return find_countermodel(vars_of(f), [&](const Valuation& v) { return !evaluate(f, v); });
}

std::optional<Valuation> sequent_valid(const Sequent& s) {
  return find_countermodel(vars_of(s), [&](const Valuation& v) {
    for (const auto& a : s.antecedent)
      if (!evaluate(a, v)) return false;
    return !evaluate(s.succedent, v);
  });
}

std::string print_valuation(const Valuation& v) {
  std::string out;
  for (const auto& [name, value] : v) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += value ? 'T' : 'F';
  }
  return out;
}

}  // namespace gnd
