#include "gnd/derived.hpp"

#include <map>

#include "gnd/kernel.hpp"
#include "gnd/parse.hpp"

namespace gnd {

namespace {

[[noreturn]] void shape_fail(const std::string& detail) {
  throw ElaborationError("wrong-shape", detail);
}

bool ante_eq(const std::vector<Fptr>& a, const std::vector<Fptr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

std::vector<Fptr> drop_last(const std::vector<Fptr>& a) {
  return std::vector<Fptr>(a.begin(), a.end() - 1);
}

}  // namespace

int ProofBuilder::emit(const Sequent& s, const std::string& rule, std::vector<int> prems) {
  ProofLine line;
  line.number = static_cast<int>(lines_.size()) + 1;
  line.sequent = s;
  line.just.rule = rule;
  line.just.premises = std::move(prems);
  if (primitive_in_system(system_, rule)) {
    auto v = check_step(system_, established_, s, line.just, line.number);
    if (v) throw ElaborationError(v->kind, v->detail);
  }
  lines_.push_back(std::move(line));
  established_.push_back(lines_.back().sequent);
  return static_cast<int>(lines_.size());
}

const Sequent& ProofBuilder::sequent_of(int line) const {
  if (line < 1 || line > static_cast<int>(lines_.size()))
    throw ElaborationError("bad-ref", "line " + std::to_string(line) + " out of range");
  return lines_[line - 1].sequent;
}

ProofScript ProofBuilder::take_script() {
  ProofScript s;
  s.system = system_;
  s.mode = mode_;
  s.lines = std::move(lines_);
  lines_.clear();
  established_.clear();
  return s;
}

int ProofBuilder::premise(const Sequent& s) { return emit(s, "premise", {}); }

int ProofBuilder::primitive(const Sequent& s, const std::string& rule, std::vector<int> prems) {
  if (!primitive_in_system(system_, rule))
    throw ElaborationError("rule-not-in-system",
                           "rule '" + rule + "' is not a primitive of " + system_name(system_));
  return emit(s, rule, std::move(prems));
}

int ProofBuilder::axiom(const Fptr& p) { return emit(Sequent{{p}, p}, "axiom", {}); }

int ProofBuilder::thin_front(int line, const Fptr& p) {
  Sequent s = sequent_of(line);
  s.antecedent.insert(s.antecedent.begin(), p);
  return emit(s, "thin-front", {line});
}

int ProofBuilder::thin_back(int line, const Fptr& p) {
  Sequent s = sequent_of(line);
  s.antecedent.push_back(p);
  return emit(s, "thin-back", {line});
}

int ProofBuilder::imp_intro(int line) {
  const Sequent& p = sequent_of(line);
  if (p.antecedent.empty()) shape_fail("imp-intro needs a nonempty antecedent");
  Sequent s{drop_last(p.antecedent), Formula::imp(p.antecedent.back(), p.succedent)};
  return emit(s, "imp-intro", {line});
}

int ProofBuilder::imp_elim(int line_p, int line_imp) {
  const Sequent& pj = sequent_of(line_imp);
  if (pj.succedent->kind != Conn::Imp) shape_fail("imp-elim major premise is not an implication");
  Sequent s{pj.antecedent, pj.succedent->rhs};
  return emit(s, "imp-elim", {line_p, line_imp});
}

int ProofBuilder::raa(int line_q, int line_nq) {
  const Sequent& p = sequent_of(line_q);
  if (p.antecedent.empty() || p.antecedent.back()->kind != Conn::Neg)
    shape_fail("raa premise must end in a negated hypothesis");
  Sequent s{drop_last(p.antecedent), p.antecedent.back()->lhs};
  return emit(s, "raa", {line_q, line_nq});
}

int ProofBuilder::raa_bot(int line) {
  const Sequent& p = sequent_of(line);
  if (p.antecedent.empty() || p.antecedent.back()->kind != Conn::Imp)
    shape_fail("raa-bot premise must end in P => #");
  Sequent s{drop_last(p.antecedent), p.antecedent.back()->lhs};
  return emit(s, "raa-bot", {line});
}

int ProofBuilder::conj_intro(int line_p, int line_q) {
  const Sequent& pi = sequent_of(line_p);
  const Sequent& pj = sequent_of(line_q);
  Sequent s{pi.antecedent, Formula::conj(pi.succedent, pj.succedent)};
  return emit(s, "conj-intro", {line_p, line_q});
}

int ProofBuilder::conj_elim_l(int line) {
  const Sequent& p = sequent_of(line);
  if (p.succedent->kind != Conn::Conj) shape_fail("conj-elim premise is not a conjunction");
  return emit(Sequent{p.antecedent, p.succedent->lhs}, "conj-elim-l", {line});
}

int ProofBuilder::conj_elim_r(int line) {
  const Sequent& p = sequent_of(line);
  if (p.succedent->kind != Conn::Conj) shape_fail("conj-elim premise is not a conjunction");
  return emit(Sequent{p.antecedent, p.succedent->rhs}, "conj-elim-r", {line});
}

int ProofBuilder::cut(int line_singleton, int line_main) {
  const Sequent& pi = sequent_of(line_singleton);
  const Sequent& pj = sequent_of(line_main);
  if (pi.antecedent.size() != 1 || pj.antecedent.empty())
    shape_fail("cut premises have the wrong shape");
  Sequent s{drop_last(pj.antecedent), pj.succedent};
  s.antecedent.push_back(pi.antecedent[0]);
  return emit(s, "cut", {line_singleton, line_main});
}

int ProofBuilder::raa_short(int line) {
  const Sequent& p = sequent_of(line);
  if (p.antecedent.empty() || p.antecedent.back()->kind != Conn::Neg)
    shape_fail("raa-short premise must end in a negated hypothesis");
  Sequent s{drop_last(p.antecedent), p.antecedent.back()->lhs};
  return emit(s, "raa-short", {line});
}

int ProofBuilder::macro(const std::string& rule, const std::vector<int>& prem_lines,
                        const Sequent& conclusion) {
  if (mode_ == Mode::Strict) return expand_macro(*this, rule, prem_lines, conclusion);
  if (!macro_in_system(system_, rule))
    throw ElaborationError("macro-not-in-system",
                           "macro '" + rule + "' is not available in " + system_name(system_));
  return emit(conclusion, rule, prem_lines);
}

namespace {

// Thins `line` out to the antecedent `target`, which must contain the line's
// antecedent as a contiguous infix; among splits, the longest suffix deletion
// wins. Returns `line` itself when nothing needs inserting.
int emit_thin(ProofBuilder& b, int line, const std::vector<Fptr>& target) {
  const Sequent cur = b.sequent_of(line);
  const auto& have = cur.antecedent;
  if (target.size() < have.size()) shape_fail("thin cannot delete antecedent formulas");
  int spare = static_cast<int>(target.size() - have.size());
  int split_p = -1;
  for (int s = spare; s >= 0; --s) {
    int p = spare - s;
    bool ok = true;
    for (size_t i = 0; i < have.size(); ++i)
      if (!same(target[p + i], have[i])) { ok = false; break; }
    if (ok) { split_p = p; break; }
  }
  if (split_p < 0)
    shape_fail("premise antecedent is not a contiguous part of the target antecedent");
  int out = line;
  for (size_t k = split_p + have.size(); k < target.size(); ++k) out = b.thin_back(out, target[k]);
  for (int k = split_p - 1; k >= 0; --k) out = b.thin_front(out, target[k]);
  return out;
}

// Delta1, P, Delta2 -> P from nothing: axiom plus thinning, using the first
// occurrence of the succedent in the antecedent.
int emit_proj(ProofBuilder& b, const Sequent& target) {
  size_t idx = target.antecedent.size();
  for (size_t i = 0; i < target.antecedent.size(); ++i)
    if (same(target.antecedent[i], target.succedent)) { idx = i; break; }
  if (idx == target.antecedent.size())
    shape_fail("proj target succedent does not occur in the antecedent");
  int out = b.axiom(target.succedent);
  for (size_t k = idx + 1; k < target.antecedent.size(); ++k)
    out = b.thin_back(out, target.antecedent[k]);
  for (int k = static_cast<int>(idx) - 1; k >= 0; --k)
    out = b.thin_front(out, target.antecedent[k]);
  return out;
}

int expand_perm(ProofBuilder& b, int prem, const Sequent& c) {
  const Sequent p = b.sequent_of(prem);
  if (!same(p.succedent, c.succedent) || p.antecedent.size() != c.antecedent.size())
    shape_fail("perm keeps the succedent and the antecedent length");
  size_t n = p.antecedent.size();
  size_t k = n;
  for (size_t i = 0; i < n; ++i)
    if (!same(p.antecedent[i], c.antecedent[i])) { k = i; break; }
  if (k == n) {
    // identical sequences: only a swap of equal neighbours can produce this
    k = n;
    for (size_t i = 0; i + 1 < n; ++i)
      if (same(p.antecedent[i], p.antecedent[i + 1])) { k = i; break; }
    if (k == n) shape_fail("perm premise and conclusion are identical with no equal neighbours");
  } else {
    if (k + 1 >= n || !same(p.antecedent[k], c.antecedent[k + 1]) ||
        !same(p.antecedent[k + 1], c.antecedent[k]))
      shape_fail("perm must swap exactly one adjacent pair");
    for (size_t i = k + 2; i < n; ++i)
      if (!same(p.antecedent[i], c.antecedent[i]))
        shape_fail("perm must swap exactly one adjacent pair");
  }
  // Export everything from the swap point, thin into the permuted context,
  // then re-apply via imp-elim against projections.
  int cur = prem;
  for (size_t i = n; i > k; --i) cur = b.imp_intro(cur);
  cur = emit_thin(b, cur, c.antecedent);
  for (size_t i = k; i < n; ++i) {
    int pr = emit_proj(b, Sequent{c.antecedent, p.antecedent[i]});
    cur = b.imp_elim(pr, cur);
  }
  return cur;
}

int expand_contr(ProofBuilder& b, int prem, const Sequent& c) {
  const Sequent p = b.sequent_of(prem);
  size_t n = p.antecedent.size();
  if (n < 2 || !same(p.antecedent[n - 1], p.antecedent[n - 2]))
    shape_fail("contr premise must end in a duplicated formula");
  if (!same(p.succedent, c.succedent) || !ante_eq(c.antecedent, drop_last(p.antecedent)))
    shape_fail("contr conclusion must drop one copy of the duplicate");
  int a = b.imp_intro(prem);
  int pr = emit_proj(b, Sequent{c.antecedent, p.antecedent.back()});
  return b.imp_elim(pr, a);
}

int expand_cut_star(ProofBuilder& b, int pi_line, int pj_line, const Sequent& c) {
  const Sequent pi = b.sequent_of(pi_line);
  const Sequent pj = b.sequent_of(pj_line);
  if (pj.antecedent.empty() || !same(pj.antecedent.back(), pi.succedent))
    shape_fail("cut* formula must be the last antecedent element of the second premise");
  std::vector<Fptr> want = drop_last(pj.antecedent);
  want.insert(want.end(), pi.antecedent.begin(), pi.antecedent.end());
  if (!same(c.succedent, pj.succedent) || !ante_eq(c.antecedent, want))
    shape_fail("cut* conclusion must be Delta, Gamma -> Q");
  int a = b.imp_intro(pj_line);
  int major = emit_thin(b, a, c.antecedent);
  int minor = emit_thin(b, pi_line, c.antecedent);
  return b.imp_elim(minor, major);
}

int expand_excontra(ProofBuilder& b, int pi_line, int pj_line, const Sequent& c) {
  const Sequent pi = b.sequent_of(pi_line);
  const Sequent pj = b.sequent_of(pj_line);
  if (!ante_eq(pi.antecedent, pj.antecedent) ||
      !same(pj.succedent, Formula::neg(pi.succedent)) || !ante_eq(c.antecedent, pi.antecedent))
    shape_fail("excontra premises must be Delta -> Q and Delta -> ~Q over the conclusion context");
  Fptr np = Formula::neg(c.succedent);
  int t1 = b.thin_back(pi_line, np);
  int t2 = b.thin_back(pj_line, np);
  return b.raa(t1, t2);
}

int expand_dne(ProofBuilder& b, const Sequent& c) {
  Fptr p = c.succedent;
  Fptr np = Formula::neg(p);
  Fptr nnp = Formula::neg(np);
  if (c.antecedent.size() != 1 || !same(c.antecedent[0], nnp))
    shape_fail("dne concludes ~~P -> P");
  int a1 = b.axiom(np);
  int a2 = b.thin_front(a1, nnp);
  int a3 = b.axiom(nnp);
  int a4 = b.thin_back(a3, np);
  return b.raa(a2, a4);
}

int expand_weak_raa(ProofBuilder& b, int pi_line, int pj_line, const Sequent& c) {
  const Sequent pi = b.sequent_of(pi_line);
  const Sequent pj = b.sequent_of(pj_line);
  if (pi.antecedent.empty() || !ante_eq(pi.antecedent, pj.antecedent) ||
      !same(pj.succedent, Formula::neg(pi.succedent)))
    shape_fail("weak-raa premises must be Delta, P -> Q and Delta, P -> ~Q");
  Fptr x = pi.antecedent.back();
  std::vector<Fptr> delta = drop_last(pi.antecedent);
  if (!ante_eq(c.antecedent, delta) || !same(c.succedent, Formula::neg(x)))
    shape_fail("weak-raa concludes Delta -> ~P");
  Fptr nnx = Formula::neg(Formula::neg(x));
  int d = expand_dne(b, Sequent{{nnx}, x});
  std::vector<Fptr> lifted = delta;
  lifted.push_back(nnx);
  int c1, c2;
  if (b.system() == SystemId::C) {
    c1 = b.cut(d, pi_line);
    c2 = b.cut(d, pj_line);
  } else {
    c1 = expand_cut_star(b, d, pi_line, Sequent{lifted, pi.succedent});
    c2 = expand_cut_star(b, d, pj_line, Sequent{lifted, pj.succedent});
  }
  return b.raa(c1, c2);
}

int expand_dn_intro(ProofBuilder& b, int prem, const Sequent& c) {
  const Sequent p = b.sequent_of(prem);
  if (!ante_eq(c.antecedent, p.antecedent) ||
      !same(c.succedent, Formula::neg(Formula::neg(p.succedent))))
    shape_fail("dn-intro concludes Delta -> ~~P from Delta -> P");
  Fptr np = Formula::neg(p.succedent);
  int t = b.thin_back(prem, np);
  std::vector<Fptr> ctx = p.antecedent;
  ctx.push_back(np);
  int pr = emit_proj(b, Sequent{ctx, np});
  return expand_weak_raa(b, t, pr, c);
}

int expand_case(ProofBuilder& b, int pi_line, int pj_line, const Sequent& c) {
  const Sequent pi = b.sequent_of(pi_line);
  const Sequent pj = b.sequent_of(pj_line);
  if (pi.antecedent.empty() || pi.antecedent.size() != pj.antecedent.size() ||
      !same(pi.succedent, pj.succedent) ||
      !same(pj.antecedent.back(), Formula::neg(pi.antecedent.back())))
    shape_fail("case premises must be Delta, Q -> P and Delta, ~Q -> P");
  std::vector<Fptr> delta = drop_last(pi.antecedent);
  if (!ante_eq(drop_last(pj.antecedent), delta) || !ante_eq(c.antecedent, delta) ||
      !same(c.succedent, pi.succedent))
    shape_fail("case concludes Delta -> P");
  Fptr q = pi.antecedent.back();
  Fptr p = pi.succedent;
  Fptr np = Formula::neg(p);
  Fptr nq = Formula::neg(q);
  std::vector<Fptr> dnp = delta;             // Delta, ~P
  dnp.push_back(np);
  std::vector<Fptr> dnpq = dnp;              // Delta, ~P, Q
  dnpq.push_back(q);
  std::vector<Fptr> dqnp = delta;            // Delta, Q, ~P
  dqnp.push_back(q);
  dqnp.push_back(np);
  int a = b.imp_intro(pj_line);                                  // Delta -> ~Q => P
  int a2 = b.thin_back(a, np);                                   // Delta, ~P -> ~Q => P
  int b1a = b.thin_back(pi_line, np);                            // Delta, Q, ~P -> P
  int b1 = expand_perm(b, b1a, Sequent{dnpq, p});                // Delta, ~P, Q -> P
  int b2 = emit_proj(b, Sequent{dnpq, np});                      // Delta, ~P, Q -> ~P
  int bb = expand_weak_raa(b, b1, b2, Sequent{dnp, nq});         // Delta, ~P -> ~Q
  int cc = b.imp_elim(bb, a2);                                   // Delta, ~P -> P
  int d = emit_proj(b, Sequent{dnp, np});                        // Delta, ~P -> ~P
  return b.raa(cc, d);                                           // Delta -> P
}

int expand_c_imp_intro(ProofBuilder& b, int prem, const Sequent& c) {
  const Sequent p = b.sequent_of(prem);
  if (p.antecedent.empty()) shape_fail("c-imp-intro premise needs a nonempty antecedent");
  Fptr pf = p.antecedent.back();
  Fptr q = p.succedent;
  Fptr pq = Formula::conj(pf, Formula::neg(q));
  std::vector<Fptr> delta = drop_last(p.antecedent);
  if (!ante_eq(c.antecedent, delta) || !same(c.succedent, Formula::neg(pq)))
    shape_fail("c-imp-intro concludes Delta -> ~(P . ~Q) from Delta, P -> Q");
  int ax = b.axiom(pq);
  int el = b.conj_elim_l(ax);                 // P . ~Q -> P
  int cu = b.cut(el, prem);                   // Delta, P . ~Q -> Q
  int er = b.conj_elim_r(ax);                 // P . ~Q -> ~Q
  std::vector<Fptr> ctx = delta;
  ctx.push_back(pq);
  int th = emit_thin(b, er, ctx);             // Delta, P . ~Q -> ~Q
  return expand_weak_raa(b, cu, th, c);       // Delta -> ~(P . ~Q)
}

int expand_c_imp_elim(ProofBuilder& b, int pi_line, int pj_line, const Sequent& c) {
  const Sequent pi = b.sequent_of(pi_line);
  const Sequent pj = b.sequent_of(pj_line);
  const Fptr& s = pj.succedent;
  if (!ante_eq(pi.antecedent, pj.antecedent) || s->kind != Conn::Neg ||
      s->lhs->kind != Conn::Conj || !same(s->lhs->lhs, pi.succedent) ||
      s->lhs->rhs->kind != Conn::Neg)
    shape_fail("c-imp-elim premises must be Delta -> P and Delta -> ~(P . ~Q)");
  Fptr q = s->lhs->rhs->lhs;
  if (!ante_eq(c.antecedent, pi.antecedent) || !same(c.succedent, q))
    shape_fail("c-imp-elim concludes Delta -> Q");
  Fptr nq = Formula::neg(q);
  int t1 = b.thin_back(pi_line, nq);          // Delta, ~Q -> P
  int ax = b.axiom(nq);
  std::vector<Fptr> ctx = pi.antecedent;
  ctx.push_back(nq);
  int t2 = emit_thin(b, ax, ctx);             // Delta, ~Q -> ~Q
  int ci = b.conj_intro(t1, t2);              // Delta, ~Q -> P . ~Q
  int t3 = b.thin_back(pj_line, nq);          // Delta, ~Q -> ~(P . ~Q)
  return b.raa(ci, t3);                       // Delta -> Q
}

int expand_raa_via_short(ProofBuilder& b, int pi_line, int pj_line, const Sequent& c) {
  const Sequent pi = b.sequent_of(pi_line);
  const Sequent pj = b.sequent_of(pj_line);
  if (pi.antecedent.empty() || !ante_eq(pi.antecedent, pj.antecedent) ||
      !same(pj.succedent, Formula::neg(pi.succedent)) ||
      pi.antecedent.back()->kind != Conn::Neg ||
      !same(pi.antecedent.back()->lhs, c.succedent) ||
      !ante_eq(c.antecedent, drop_last(pi.antecedent)))
    shape_fail("raa-via-short premises must have raa shape");
  int ci = b.conj_intro(pi_line, pj_line);
  return b.raa_short(ci);
}

int expand_short_via_raa(ProofBuilder& b, int prem, const Sequent& c) {
  const Sequent p = b.sequent_of(prem);
  if (p.antecedent.empty() || p.succedent->kind != Conn::Conj ||
      !same(p.succedent->rhs, Formula::neg(p.succedent->lhs)) ||
      p.antecedent.back()->kind != Conn::Neg ||
      !same(p.antecedent.back()->lhs, c.succedent) ||
      !ante_eq(c.antecedent, drop_last(p.antecedent)))
    shape_fail("short-via-raa premise must have raa-short shape");
  int el = b.conj_elim_l(prem);
  int er = b.conj_elim_r(prem);
  return b.raa(el, er);
}

int expand_thin(ProofBuilder& b, int prem, const Sequent& c) {
  const Sequent p = b.sequent_of(prem);
  if (!same(p.succedent, c.succedent)) shape_fail("thin keeps the succedent");
  return emit_thin(b, prem, c.antecedent);
}

const std::map<std::string, int>& macro_arities() {
  static const std::map<std::string, int> arities = {
      {"thin", 1},       {"proj", 0},         {"perm", 1},          {"contr", 1},
      {"cut*", 2},       {"excontra", 2},     {"dne", 0},           {"weak-raa", 2},
      {"dn-intro", 1},   {"case", 2},         {"c-imp-intro", 1},   {"c-imp-elim", 2},
      {"raa-via-short", 2}, {"short-via-raa", 1}};
  return arities;
}

}  // namespace

int expand_macro(ProofBuilder& b, const std::string& rule, const std::vector<int>& prem_lines,
                 const Sequent& conclusion) {
  if (!macro_in_system(b.system(), rule)) {
    if (known_macro(rule))
      throw ElaborationError("macro-not-in-system", "macro '" + rule +
                                 "' is not available in " + system_name(b.system()));
    throw ElaborationError("unknown-rule", "unknown macro '" + rule + "'");
  }
  auto it = macro_arities().find(rule);
  if (static_cast<int>(prem_lines.size()) != it->second)
    throw ElaborationError("arity-mismatch",
                           "macro '" + rule + "' takes " + std::to_string(it->second) +
                               " premise(s), got " + std::to_string(prem_lines.size()));
  int out;
  if (rule == "thin") out = expand_thin(b, prem_lines[0], conclusion);
  else if (rule == "proj") out = emit_proj(b, conclusion);
  else if (rule == "perm") out = expand_perm(b, prem_lines[0], conclusion);
  else if (rule == "contr") out = expand_contr(b, prem_lines[0], conclusion);
  else if (rule == "cut*") out = expand_cut_star(b, prem_lines[0], prem_lines[1], conclusion);
  else if (rule == "excontra") out = expand_excontra(b, prem_lines[0], prem_lines[1], conclusion);
  else if (rule == "dne") out = expand_dne(b, conclusion);
  else if (rule == "weak-raa") out = expand_weak_raa(b, prem_lines[0], prem_lines[1], conclusion);
  else if (rule == "dn-intro") out = expand_dn_intro(b, prem_lines[0], conclusion);
  else if (rule == "case") out = expand_case(b, prem_lines[0], prem_lines[1], conclusion);
  else if (rule == "c-imp-intro") out = expand_c_imp_intro(b, prem_lines[0], conclusion);
  else if (rule == "c-imp-elim") out = expand_c_imp_elim(b, prem_lines[0], prem_lines[1], conclusion);
  else if (rule == "raa-via-short") out = expand_raa_via_short(b, prem_lines[0], prem_lines[1], conclusion);
  else if (rule == "short-via-raa") out = expand_short_via_raa(b, prem_lines[0], conclusion);
  else throw ElaborationError("unknown-rule", "unknown macro '" + rule + "'");
  if (!(b.sequent_of(out) == conclusion))
    throw ElaborationError("wrong-shape", "expansion concludes '" +
                               print_sequent(b.sequent_of(out)) + "', declared '" +
                               print_sequent(conclusion) + "'");
  return out;
}

std::vector<ProofLine> elaborate_step(SystemId system, const MacroInstance& m) {
  ProofBuilder b(system, Mode::Strict);
  std::vector<int> prem_lines;
  for (const auto& p : m.premises) prem_lines.push_back(b.premise(p));
  expand_macro(b, m.rule, prem_lines, m.conclusion);
  return b.take_script().lines;
}

ProofScript elaborate_script(const ProofScript& script) {
  ProofBuilder b(script.system, Mode::Strict);
  std::map<int, int> line_map;
  for (const auto& line : script.lines) {
    std::vector<int> refs;
    for (int r : line.just.premises) {
      auto it = line_map.find(r);
      if (it == line_map.end())
        throw ElaborationError("bad-ref",
                               "line " + std::to_string(line.number) + ": bad premise reference");
      refs.push_back(it->second);
    }
    int mapped;
    try {
      if (primitive_in_system(script.system, line.just.rule)) {
        mapped = b.primitive(line.sequent, line.just.rule, refs);
      } else {
        mapped = expand_macro(b, line.just.rule, refs, line.sequent);
      }
    } catch (const ElaborationError& e) {
      throw ElaborationError(e.kind, "line " + std::to_string(line.number) + ": " + e.detail);
    }
    line_map[line.number] = mapped;
  }
  if (!script.lines.empty() && line_map[script.lines.back().number] != b.last_line())
    throw ElaborationError("wrong-shape", "script ends with an identity macro application");
  return b.take_script();
}

}  // namespace gnd
