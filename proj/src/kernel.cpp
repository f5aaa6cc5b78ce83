#include "gnd/kernel.hpp"

#include <set>

#include "gnd/derived.hpp"
#include "gnd/parse.hpp"

namespace gnd {

namespace {

const std::set<std::string> kCommonPrimitives = {"axiom", "premise", "thin-front", "thin-back"};
const std::set<std::string> kGPrimitives = {"imp-intro", "imp-elim", "raa"};
const std::set<std::string> kGBotPrimitives = {"imp-intro", "imp-elim", "raa-bot"};
const std::set<std::string> kCPrimitives = {"raa", "conj-intro", "conj-elim-l", "conj-elim-r",
                                            "cut", "raa-short"};

const std::set<std::string> kAllMacros = {
    "thin", "proj", "perm", "contr", "cut*", "excontra", "dne", "weak-raa",
    "dn-intro", "case", "c-imp-intro", "c-imp-elim", "raa-via-short", "short-via-raa"};

int rule_arity(const std::string& rule) {
  if (rule == "axiom" || rule == "premise") return 0;
  if (rule == "imp-elim" || rule == "raa" || rule == "conj-intro" || rule == "cut") return 2;
  return 1;
}

Violation make(int line, const std::string& kind, const std::string& detail) {
  return Violation{line, kind, detail};
}

bool prefix_eq(const std::vector<Fptr>& a, const std::vector<Fptr>& b, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

bool ante_eq(const std::vector<Fptr>& a, const std::vector<Fptr>& b) {
  return a.size() == b.size() && prefix_eq(a, b, a.size());
}

}  // namespace

bool primitive_in_system(SystemId system, const std::string& rule) {
  if (kCommonPrimitives.count(rule)) return is_sequent_system(system);
  switch (system) {
    case SystemId::G: return kGPrimitives.count(rule) > 0;
    case SystemId::GBot: return kGBotPrimitives.count(rule) > 0;
    case SystemId::C: return kCPrimitives.count(rule) > 0;
    default: return false;
  }
}

bool macro_in_system(SystemId system, const std::string& rule) {
  if (rule == "thin" || rule == "proj") return is_sequent_system(system);
  if (rule == "perm" || rule == "contr" || rule == "cut*")
    return system == SystemId::G || system == SystemId::GBot;
  if (rule == "excontra" || rule == "dne" || rule == "weak-raa" || rule == "dn-intro")
    return system == SystemId::G || system == SystemId::C;
  if (rule == "case") return system == SystemId::G;
  if (rule == "c-imp-intro" || rule == "c-imp-elim" || rule == "raa-via-short" ||
      rule == "short-via-raa")
    return system == SystemId::C;
  return false;
}

bool known_macro(const std::string& rule) { return kAllMacros.count(rule) > 0; }

bool known_rule(const std::string& rule) {
  return known_macro(rule) || kCommonPrimitives.count(rule) || kGPrimitives.count(rule) ||
         kGBotPrimitives.count(rule) || kCPrimitives.count(rule);
}

std::optional<Violation> check_step(SystemId system, const std::vector<Sequent>& established,
                                    const Sequent& c, const Justification& just, int n) {
  const std::string& rule = just.rule;
  if (!primitive_in_system(system, rule)) {
    if (known_rule(rule))
      return make(n, "rule-not-in-system",
                  "rule '" + rule + "' is not a primitive of " + system_name(system));
    return make(n, "unknown-rule", "unknown rule '" + rule + "'");
  }
  if (static_cast<int>(just.premises.size()) != rule_arity(rule))
    return make(n, "arity-mismatch", "rule '" + rule + "' takes " +
                                         std::to_string(rule_arity(rule)) + " premise(s), got " +
                                         std::to_string(just.premises.size()));
  for (int ref : just.premises)
    if (ref < 1 || ref > static_cast<int>(established.size()))
      return make(n, "bad-ref", "premise reference " + std::to_string(ref) + " out of range");

  auto prem = [&](int k) -> const Sequent& { return established[just.premises[k] - 1]; };

  if (rule == "premise") return std::nullopt;

  if (rule == "axiom") {
    if (c.antecedent.size() != 1 || !same(c.antecedent[0], c.succedent))
      return make(n, "wrong-shape", "axiom must conclude P -> P");
    return std::nullopt;
  }

  if (rule == "thin-front" || rule == "thin-back") {
    const Sequent& p = prem(0);
    if (!same(p.succedent, c.succedent))
      return make(n, "wrong-shape", "thinning must not change the succedent");
    if (c.antecedent.size() != p.antecedent.size() + 1)
      return make(n, "wrong-shape", "thinning inserts exactly one antecedent formula");
    bool ok = true;
    if (rule == "thin-front") {
      for (size_t i = 0; i < p.antecedent.size(); ++i)
        if (!same(c.antecedent[i + 1], p.antecedent[i])) { ok = false; break; }
    } else {
      ok = prefix_eq(c.antecedent, p.antecedent, p.antecedent.size());
    }
    if (!ok)
      return make(n, "wrong-shape", rule == "thin-front"
                                        ? "conclusion is not the premise with one formula prepended"
                                        : "conclusion is not the premise with one formula appended");
    return std::nullopt;
  }

  if (rule == "imp-intro") {
    const Sequent& p = prem(0);
    if (p.antecedent.empty())
      return make(n, "wrong-shape", "imp-intro needs a nonempty premise antecedent");
    if (c.antecedent.size() + 1 != p.antecedent.size() ||
        !prefix_eq(c.antecedent, p.antecedent, c.antecedent.size()))
      return make(n, "wrong-shape", "imp-intro removes exactly the last antecedent element");
    Fptr want = Formula::imp(p.antecedent.back(), p.succedent);
    if (!same(c.succedent, want))
      return make(n, "wrong-shape",
                  "conclusion succedent must be " + print_formula(want));
    return std::nullopt;
  }

  if (rule == "imp-elim") {
    const Sequent& pi = prem(0);
    const Sequent& pj = prem(1);
    if (!ante_eq(pi.antecedent, pj.antecedent) || !ante_eq(pi.antecedent, c.antecedent))
      return make(n, "context-mismatch", "imp-elim is additive: all antecedents must be identical");
    if (pj.succedent->kind != Conn::Imp || !same(pj.succedent->lhs, pi.succedent) ||
        !same(pj.succedent->rhs, c.succedent))
      return make(n, "wrong-shape", "premises must be Delta -> P and Delta -> P => Q");
    return std::nullopt;
  }

  if (rule == "raa") {
    const Sequent& pi = prem(0);
    const Sequent& pj = prem(1);
    if (pi.antecedent.empty() || !ante_eq(pi.antecedent, pj.antecedent))
      return make(n, "context-mismatch", "raa premises must have identical nonempty antecedents");
    if (!same(pj.succedent, Formula::neg(pi.succedent)))
      return make(n, "wrong-shape", "second raa succedent must be the exact negation of the first");
    const Fptr& last = pi.antecedent.back();
    if (last->kind != Conn::Neg || !same(last->lhs, c.succedent))
      return make(n, "wrong-shape", "last antecedent element must be ~P for conclusion succedent P");
    if (c.antecedent.size() + 1 != pi.antecedent.size() ||
        !prefix_eq(c.antecedent, pi.antecedent, c.antecedent.size()))
      return make(n, "wrong-shape", "raa discharges exactly the last antecedent element");
    return std::nullopt;
  }

  if (rule == "raa-bot") {
    const Sequent& p = prem(0);
    if (p.antecedent.empty() || p.succedent->kind != Conn::Falsum)
      return make(n, "wrong-shape", "raa-bot premise must be Delta, P => # -> #");
    const Fptr& last = p.antecedent.back();
    if (last->kind != Conn::Imp || last->rhs->kind != Conn::Falsum ||
        !same(last->lhs, c.succedent))
      return make(n, "wrong-shape", "last antecedent element must be P => # for conclusion P");
    if (c.antecedent.size() + 1 != p.antecedent.size() ||
        !prefix_eq(c.antecedent, p.antecedent, c.antecedent.size()))
      return make(n, "wrong-shape", "raa-bot discharges exactly the last antecedent element");
    return std::nullopt;
  }

  if (rule == "conj-intro") {
    const Sequent& pi = prem(0);
    const Sequent& pj = prem(1);
    if (!ante_eq(pi.antecedent, pj.antecedent) || !ante_eq(pi.antecedent, c.antecedent))
      return make(n, "context-mismatch", "conj-intro is additive");
    if (!same(c.succedent, Formula::conj(pi.succedent, pj.succedent)))
      return make(n, "wrong-shape", "conclusion succedent must be P . Q");
    return std::nullopt;
  }

  if (rule == "conj-elim-l" || rule == "conj-elim-r") {
    const Sequent& p = prem(0);
    if (!ante_eq(p.antecedent, c.antecedent))
      return make(n, "context-mismatch", "conj elimination keeps the antecedent");
    if (p.succedent->kind != Conn::Conj)
      return make(n, "wrong-shape", "premise succedent must be a conjunction");
    const Fptr& want = rule == "conj-elim-l" ? p.succedent->lhs : p.succedent->rhs;
    if (!same(c.succedent, want))
      return make(n, "wrong-shape", "conclusion succedent must be the chosen conjunct");
    return std::nullopt;
  }

  if (rule == "cut") {
    const Sequent& pi = prem(0);
    const Sequent& pj = prem(1);
    if (pi.antecedent.size() != 1)
      return make(n, "wrong-shape", "cut's first premise must have a singleton antecedent R -> P");
    if (pj.antecedent.empty() || !same(pj.antecedent.back(), pi.succedent))
      return make(n, "wrong-shape", "cut formula must be the last antecedent element of premise 2");
    if (!same(c.succedent, pj.succedent) ||
        c.antecedent.size() != pj.antecedent.size() ||
        !prefix_eq(c.antecedent, pj.antecedent, pj.antecedent.size() - 1) ||
        !same(c.antecedent.back(), pi.antecedent[0]))
      return make(n, "wrong-shape", "conclusion must be Delta, R -> Q");
    return std::nullopt;
  }

  if (rule == "raa-short") {
    const Sequent& p = prem(0);
    if (p.antecedent.empty())
      return make(n, "wrong-shape", "raa-short premise needs a nonempty antecedent");
    if (p.succedent->kind != Conn::Conj || !same(p.succedent->rhs, Formula::neg(p.succedent->lhs)))
      return make(n, "wrong-shape", "premise succedent must be Q . ~Q");
    const Fptr& last = p.antecedent.back();
    if (last->kind != Conn::Neg || !same(last->lhs, c.succedent))
      return make(n, "wrong-shape", "last antecedent element must be ~P for conclusion succedent P");
    if (c.antecedent.size() + 1 != p.antecedent.size() ||
        !prefix_eq(c.antecedent, p.antecedent, c.antecedent.size()))
      return make(n, "wrong-shape", "raa-short discharges exactly the last antecedent element");
    return std::nullopt;
  }

  return make(n, "unknown-rule", "unhandled rule '" + rule + "'");
}

CheckReport check_script(const ProofScript& script) {
  CheckReport report;
  std::vector<Sequent> established;
  established.reserve(script.lines.size());
  for (const auto& line : script.lines) {
    const std::string& rule = line.just.rule;
    report.rule_counts[rule]++;
    bool is_macro_token = known_macro(rule) && !primitive_in_system(script.system, rule);
    if (script.mode == Mode::Macro && is_macro_token) {
      if (!macro_in_system(script.system, rule)) {
        report.violations.push_back({line.number, "rule-not-in-system",
                                     "macro '" + rule + "' is not available in " +
                                         std::string(system_name(script.system))});
      } else {
        MacroInstance inst;
        inst.rule = rule;
        bool refs_ok = true;
        for (int ref : line.just.premises) {
          if (ref < 1 || ref > static_cast<int>(established.size())) {
            report.violations.push_back(
                {line.number, "bad-ref", "premise reference " + std::to_string(ref) + " out of range"});
            refs_ok = false;
            break;
          }
          inst.premises.push_back(established[ref - 1]);
        }
        if (refs_ok) {
          inst.conclusion = line.sequent;
          try {
            elaborate_step(script.system, inst);  // kernel-checks the expansion internally
          } catch (const ElaborationError& e) {
            report.violations.push_back({line.number, e.kind, e.detail});
          }
        }
      }
    } else {
      auto v = check_step(script.system, established, line.sequent, line.just, line.number);
      if (v) report.violations.push_back(*v);
    }
    // Keep going after a violation so later lines are still checked.
    established.push_back(line.sequent);
  }
  report.accepted = report.violations.empty();
  return report;
}

std::string CheckReport::render() const {
  std::string out;
  for (const auto& v : violations)
    out += "line " + std::to_string(v.line) + ": " + v.kind + ": " + v.detail + "\n";
  if (accepted)
    out += "ACCEPTED\n";
  else
    out += "REJECTED (" + std::to_string(violations.size()) + " violations)\n";
  return out;
}

}  // namespace gnd
