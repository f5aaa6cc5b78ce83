#include "gnd/hilbert.hpp"

#include <map>
#include <unordered_map>

#include "gnd/completeness.hpp"
#include "gnd/derived.hpp"
#include "gnd/parse.hpp"

namespace gnd {

namespace {

Fptr imp(const Fptr& a, const Fptr& b) { return Formula::imp(a, b); }
Fptr neg(const Fptr& a) { return Formula::neg(a); }

bool axiom_allowed(SystemId system, HilbertJust::Kind kind) {
  if (kind == HilbertJust::Ax3) return system == SystemId::HLT;
  if (kind == HilbertJust::Ax3Prime) return system == SystemId::HL3;
  return true;
}

// Builds Delta_1 => (... => (Delta_n => A)).
Fptr exported(const std::vector<Fptr>& delta, const Fptr& a) {
  Fptr out = a;
  for (auto it = delta.rbegin(); it != delta.rend(); ++it) out = imp(*it, out);
  return out;
}

// Audited accumulator for Hilbert lines; theorem lines are deduplicated by
// formula so repeated lemmas are emitted once.
struct HilbertBuilder {
  SystemId system;
  std::vector<Fptr> hypotheses;
  std::vector<HilbertLine> lines;
  std::unordered_map<const Formula*, int> memo;

  explicit HilbertBuilder(SystemId s) : system(s) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ElaborationError("internal", msg);
  }

  Fptr formula_of(int n) const { return lines[n - 1].formula; }

  int push(const Fptr& f, HilbertJust just, bool dedupe = true) {
    if (dedupe) {
      auto it = memo.find(f.get());
      if (it != memo.end()) return it->second;
    }
    HilbertLine l;
    l.number = static_cast<int>(lines.size()) + 1;
    l.formula = f;
    l.just = just;
    lines.push_back(l);
    if (dedupe) memo[f.get()] = l.number;
    return l.number;
  }

  int schema(HilbertJust::Kind kind, const Fptr& f) {
    if (!axiom_allowed(system, kind) || !matches_schema(kind, f))
      fail("bad axiom instance '" + print_formula(f) + "'");
    return push(f, HilbertJust{kind, 0, 0});
  }

  int hyp(int index) {
    return push(hypotheses[index - 1], HilbertJust{HilbertJust::Hyp, index, 0}, false);
  }

  int mp(int line_a, int line_imp) {
    Fptr fa = formula_of(line_a);
    Fptr fi = formula_of(line_imp);
    if (fi->kind != Conn::Imp || !same(fi->lhs, fa)) fail("bad mp application");
    return push(fi->rhs, HilbertJust{HilbertJust::Mp, line_a, line_imp});
  }

  // |- P => P from ax1 and ax2.
  int p_imp_p(const Fptr& p) {
    Fptr pp = imp(p, p);
    auto it = memo.find(pp.get());
    if (it != memo.end()) return it->second;
    int a = schema(HilbertJust::Ax1, imp(p, imp(pp, p)));
    int b = schema(HilbertJust::Ax2, imp(imp(p, imp(pp, p)), imp(imp(p, pp), pp)));
    int c = mp(a, b);
    int d = schema(HilbertJust::Ax1, imp(p, pp));
    return mp(d, c);
  }

  // From |- X => Y derive |- (D => X) => (D => Y).
  int mono_step(int line_xy, const Fptr& d) {
    Fptr xy = formula_of(line_xy);
    if (xy->kind != Conn::Imp) fail("mono over a non-implication");
    int a1 = schema(HilbertJust::Ax1, imp(xy, imp(d, xy)));
    int m1 = mp(line_xy, a1);
    int a2 = schema(HilbertJust::Ax2,
                    imp(imp(d, xy), imp(imp(d, xy->lhs), imp(d, xy->rhs))));
    return mp(m1, a2);
  }

  // From |- A => B and |- B => C derive |- A => C.
  int trans(int line_ab, int line_bc) {
    Fptr ab = formula_of(line_ab);
    Fptr bc = formula_of(line_bc);
    int a1 = schema(HilbertJust::Ax1, imp(bc, imp(ab->lhs, bc)));
    int m1 = mp(line_bc, a1);
    int a2 = schema(HilbertJust::Ax2,
                    imp(imp(ab->lhs, bc), imp(imp(ab->lhs, bc->lhs), imp(ab->lhs, bc->rhs))));
    int m2 = mp(m1, a2);
    return mp(line_ab, m2);
  }

  // |- Exp(delta, X => Y) => (Exp(delta, X) => Exp(delta, Y)); delta nonempty.
  int distrib(const std::vector<Fptr>& delta, const Fptr& x, const Fptr& y) {
    const Fptr& d = delta.front();
    if (delta.size() == 1)
      return schema(HilbertJust::Ax2, imp(imp(d, imp(x, y)), imp(imp(d, x), imp(d, y))));
    std::vector<Fptr> rest(delta.begin() + 1, delta.end());
    int ih = distrib(rest, x, y);
    int s1 = mono_step(ih, d);
    Fptr x2 = exported(rest, x);
    Fptr x3 = exported(rest, y);
    int a2 = schema(HilbertJust::Ax2,
                    imp(imp(d, imp(x2, x3)), imp(imp(d, x2), imp(d, x3))));
    return trans(s1, a2);
  }

  // From theorem line t, derive |- Exp(delta, T) by repeated ax1 weakening.
  int weaken_under(const std::vector<Fptr>& delta, int line_t) {
    int cur = line_t;
    for (auto it = delta.rbegin(); it != delta.rend(); ++it) {
      Fptr t = formula_of(cur);
      int a1 = schema(HilbertJust::Ax1, imp(t, imp(*it, t)));
      cur = mp(cur, a1);
    }
    return cur;
  }

  // From |- Exp(delta, X => Y) and |- Exp(delta, X) derive |- Exp(delta, Y).
  int apply_under(const std::vector<Fptr>& delta, int line_imp, int line_arg, const Fptr& x,
                  const Fptr& y) {
    if (delta.empty()) return mp(line_arg, line_imp);
    int d = distrib(delta, x, y);
    int m1 = mp(line_imp, d);
    return mp(line_arg, m1);
  }

  // Re-emits `line` at the end when dedup left the conclusion mid-script.
  int finalize(int line) {
    if (line == static_cast<int>(lines.size())) return line;
    HilbertLine l = lines[line - 1];
    return push(l.formula, l.just, false);
  }

  HilbertScript take() {
    HilbertScript s;
    s.system = system;
    s.hypotheses = hypotheses;
    s.lines = std::move(lines);
    return s;
  }
};

}  // namespace

bool matches_schema(HilbertJust::Kind kind, const Fptr& f) {
  if (f->kind != Conn::Imp) return false;
  const Fptr& l = f->lhs;
  const Fptr& r = f->rhs;
  switch (kind) {
    case HilbertJust::Ax1:
      // P => (Q => P)
      return r->kind == Conn::Imp && same(r->rhs, l);
    case HilbertJust::Ax2: {
      // (P => (Q => R)) => ((P => Q) => (P => R))
      if (l->kind != Conn::Imp || l->rhs->kind != Conn::Imp) return false;
      Fptr p = l->lhs, q = l->rhs->lhs, rr = l->rhs->rhs;
      return r->kind == Conn::Imp && r->lhs->kind == Conn::Imp && r->rhs->kind == Conn::Imp &&
             same(r->lhs->lhs, p) && same(r->lhs->rhs, q) && same(r->rhs->lhs, p) &&
             same(r->rhs->rhs, rr);
    }
    case HilbertJust::Ax3: {
      // (~P => ~Q) => (Q => P)
      if (l->kind != Conn::Imp || l->lhs->kind != Conn::Neg || l->rhs->kind != Conn::Neg)
        return false;
      Fptr p = l->lhs->lhs, q = l->rhs->lhs;
      return r->kind == Conn::Imp && same(r->lhs, q) && same(r->rhs, p);
    }
    case HilbertJust::Ax3Prime: {
      // (~P => Q) => ((~P => ~Q) => P)
      if (l->kind != Conn::Imp || l->lhs->kind != Conn::Neg) return false;
      Fptr p = l->lhs->lhs, q = l->rhs;
      return r->kind == Conn::Imp && r->lhs->kind == Conn::Imp &&
             same(r->lhs->lhs, l->lhs) && r->lhs->rhs->kind == Conn::Neg &&
             same(r->lhs->rhs->lhs, q) && same(r->rhs, p);
    }
    default:
      return false;
  }
}

CheckReport check_hilbert(const HilbertScript& script) {
  CheckReport report;
  for (const auto& line : script.lines) {
    int n = line.number;
    switch (line.just.kind) {
      case HilbertJust::Ax1:
      case HilbertJust::Ax2:
      case HilbertJust::Ax3:
      case HilbertJust::Ax3Prime: {
        const char* names[] = {"ax1", "ax2", "ax3", "ax3'"};
        std::string name = names[line.just.kind];
        report.rule_counts[name]++;
        if (!axiom_allowed(script.system, line.just.kind)) {
          report.violations.push_back({n, "wrong-system-axiom",
                                       name + " is not an axiom of " +
                                           std::string(system_name(script.system))});
        } else if (!matches_schema(line.just.kind, line.formula)) {
          report.violations.push_back(
              {n, "not-a-schema-instance",
               "'" + print_formula(line.formula) + "' does not match " + name});
        }
        break;
      }
      case HilbertJust::Hyp: {
        report.rule_counts["hyp"]++;
        int k = line.just.ref_a;
        if (k < 1 || k > static_cast<int>(script.hypotheses.size()))
          report.violations.push_back({n, "bad-ref", "hypothesis index out of range"});
        else if (!same(line.formula, script.hypotheses[k - 1]))
          report.violations.push_back(
              {n, "bad-hyp", "line formula is not hypothesis " + std::to_string(k)});
        break;
      }
      case HilbertJust::Mp: {
        report.rule_counts["mp"]++;
        int a = line.just.ref_a, bb = line.just.ref_b;
        if (a < 1 || a >= n || bb < 1 || bb >= n) {
          report.violations.push_back({n, "bad-ref", "mp reference out of range"});
          break;
        }
        const Fptr& fa = script.lines[a - 1].formula;
        const Fptr& fi = script.lines[bb - 1].formula;
        if (fi->kind != Conn::Imp || !same(fi->lhs, fa) || !same(fi->rhs, line.formula))
          report.violations.push_back(
              {n, "bad-mp", "lines " + std::to_string(a) + ", " + std::to_string(bb) +
                                " do not yield '" + print_formula(line.formula) + "'"});
        break;
      }
    }
  }
  report.accepted = report.violations.empty();
  return report;
}

HilbertScript deduction_theorem(const HilbertScript& script) {
  if (script.hypotheses.empty())
    throw ElaborationError("wrong-shape", "no hypothesis to discharge");
  {
    CheckReport r = check_hilbert(script);
    if (!r.accepted) throw ElaborationError("rejected-input", "input proof does not check");
  }
  Fptr p = script.hypotheses.back();
  int k = static_cast<int>(script.hypotheses.size());
  HilbertBuilder hb(script.system);
  hb.hypotheses.assign(script.hypotheses.begin(), script.hypotheses.end() - 1);
  // Lines that never touch the discharged hypothesis are replayed verbatim
  // and only weakened to P => A on demand; dependent lines are transformed.
  std::vector<char> dep(script.lines.size() + 1, 0);
  std::map<int, int> plain;   // independent old line -> replayed line proving A
  std::map<int, int> lifted;  // old line -> line proving P => A
  auto lift = [&](int old) -> int {
    auto it = lifted.find(old);
    if (it != lifted.end()) return it->second;
    const Fptr& a = script.lines[old - 1].formula;
    int w = hb.schema(HilbertJust::Ax1, imp(a, imp(p, a)));
    int r = hb.mp(plain.at(old), w);
    lifted[old] = r;
    return r;
  };
  for (const auto& line : script.lines) {
    int n = line.number;
    const Fptr& a = line.formula;
    switch (line.just.kind) {
      case HilbertJust::Hyp:
        if (line.just.ref_a == k && same(a, p)) {
          dep[n] = 1;
          lifted[n] = hb.p_imp_p(p);
        } else {
          plain[n] = hb.hyp(line.just.ref_a);
        }
        break;
      case HilbertJust::Ax1:
      case HilbertJust::Ax2:
      case HilbertJust::Ax3:
      case HilbertJust::Ax3Prime:
        plain[n] = hb.schema(line.just.kind, a);
        break;
      case HilbertJust::Mp: {
        int ra = line.just.ref_a, rb = line.just.ref_b;
        dep[n] = dep[ra] || dep[rb];
        if (!dep[n]) {
          plain[n] = hb.mp(plain.at(ra), plain.at(rb));
          break;
        }
        const Fptr& fa = script.lines[ra - 1].formula;
        int a2 = hb.schema(HilbertJust::Ax2,
                           imp(imp(p, imp(fa, a)), imp(imp(p, fa), imp(p, a))));
        int m1 = hb.mp(dep[rb] ? lifted.at(rb) : lift(rb), a2);
        lifted[n] = hb.mp(dep[ra] ? lifted.at(ra) : lift(ra), m1);
        break;
      }
    }
  }
  int last = script.lines.back().number;
  hb.finalize(dep[last] ? lifted.at(last) : lift(last));
  return hb.take();
}

namespace {

// Emits a fixed primitive derivation of -> A for an axiom-schema instance A
// and returns its line number. Each schema has a short closed-form proof:
// project the schema's hypotheses, combine, then discharge them in order.
int emit_axiom_template(ProofBuilder& b, HilbertJust::Kind kind, const Fptr& a) {
  switch (kind) {
    case HilbertJust::Ax1: {
      // P => (Q => P)
      int l = b.axiom(a->lhs);
      l = b.thin_back(l, a->rhs->lhs);
      l = b.imp_intro(l);
      return b.imp_intro(l);
    }
    case HilbertJust::Ax2: {
      // (P => (Q => R)) => ((P => Q) => (P => R))
      Fptr x = a->lhs;           // P => (Q => R)
      Fptr y = a->rhs->lhs;      // P => Q
      Fptr p = x->lhs;
      int lx = b.thin_back(b.thin_back(b.axiom(x), y), p);        // X, Y, P -> X
      int ly = b.thin_back(b.thin_front(b.axiom(y), x), p);       // X, Y, P -> Y
      int lp = b.thin_front(b.thin_front(b.axiom(p), y), x);      // X, Y, P -> P
      int qr = b.imp_elim(lp, lx);                                // X, Y, P -> Q => R
      int q = b.imp_elim(lp, ly);                                 // X, Y, P -> Q
      int r = b.imp_elim(q, qr);                                  // X, Y, P -> R
      return b.imp_intro(b.imp_intro(b.imp_intro(r)));
    }
    case HilbertJust::Ax3: {
      // (~P => ~Q) => (Q => P)
      Fptr x = a->lhs;           // ~P => ~Q
      Fptr q = a->rhs->lhs;
      Fptr np = x->lhs;          // ~P
      int lx = b.thin_back(b.thin_back(b.axiom(x), q), np);       // X, Q, ~P -> X
      int lnp = b.thin_front(b.thin_front(b.axiom(np), q), x);    // X, Q, ~P -> ~P
      int nq = b.imp_elim(lnp, lx);                               // X, Q, ~P -> ~Q
      int lq = b.thin_back(b.thin_front(b.axiom(q), x), np);      // X, Q, ~P -> Q
      int p = b.raa(lq, nq);                                      // X, Q -> P
      return b.imp_intro(b.imp_intro(p));
    }
    case HilbertJust::Ax3Prime: {
      // (~P => Q) => ((~P => ~Q) => P)
      Fptr x = a->lhs;           // ~P => Q
      Fptr y = a->rhs->lhs;      // ~P => ~Q
      Fptr np = x->lhs;          // ~P
      int lx = b.thin_back(b.thin_back(b.axiom(x), y), np);       // X, Y, ~P -> X
      int ly = b.thin_back(b.thin_front(b.axiom(y), x), np);      // X, Y, ~P -> Y
      int lnp = b.thin_front(b.thin_front(b.axiom(np), y), x);    // X, Y, ~P -> ~P
      int q = b.imp_elim(lnp, lx);                                // X, Y, ~P -> Q
      int nq = b.imp_elim(lnp, ly);                               // X, Y, ~P -> ~Q
      int p = b.raa(q, nq);                                       // X, Y -> P
      return b.imp_intro(b.imp_intro(p));
    }
    default:
      throw ElaborationError("internal", "not an axiom justification");
  }
}

}  // namespace

ProofScript hilbert_to_g(const HilbertScript& script) {
  {
    CheckReport r = check_hilbert(script);
    if (!r.accepted) throw ElaborationError("rejected-input", "input proof does not check");
  }
  ProofBuilder b(SystemId::G, Mode::Macro);
  const std::vector<Fptr>& ctx = script.hypotheses;
  std::map<int, int> m;
  std::unordered_map<const Formula*, int> theorem_cache;
  for (const auto& line : script.lines) {
    bool is_last = line.number == static_cast<int>(script.lines.size());
    int mapped;
    switch (line.just.kind) {
      case HilbertJust::Hyp:
        mapped = b.macro("proj", {}, Sequent{ctx, line.formula});
        break;
      case HilbertJust::Mp:
        mapped = b.imp_elim(m.at(line.just.ref_a), m.at(line.just.ref_b));
        break;
      default: {  // axiom-schema instance: emitted from a fixed template
        auto it = theorem_cache.find(line.formula.get());
        int thm;
        if (it != theorem_cache.end() && !(is_last && ctx.empty())) {
          thm = it->second;
        } else {
          thm = emit_axiom_template(b, line.just.kind, line.formula);
          theorem_cache[line.formula.get()] = thm;
        }
        if (ctx.empty())
          mapped = thm;
        else
          mapped = b.macro("thin", {thm}, Sequent{ctx, line.formula});
        break;
      }
    }
    m[line.number] = mapped;
  }
  if (script.lines.empty()) throw ElaborationError("wrong-shape", "empty Hilbert script");
  return b.take_script();
}

HilbertScript g_to_hilbert(const ProofScript& script) {
  ProofScript strict = elaborate_script(script);
  HilbertBuilder hb(SystemId::HL3);
  std::map<int, int> m;  // G line -> Hilbert line proving Exp(Delta, A)
  for (const auto& line : strict.lines) {
    const std::string& rule = line.just.rule;
    const Sequent& s = line.sequent;
    auto prem = [&](size_t k) -> const Sequent& {
      return strict.lines[line.just.premises[k] - 1].sequent;
    };
    auto pline = [&](size_t k) { return m.at(line.just.premises[k]); };
    int mapped;
    if (rule == "axiom") {
      mapped = hb.p_imp_p(s.succedent);
    } else if (rule == "premise") {
      throw ElaborationError("wrong-shape", "hypothetical (premise) scripts cannot be translated");
    } else if (rule == "thin-front") {
      Fptr prev = exported(prem(0).antecedent, prem(0).succedent);
      int a1 = hb.schema(HilbertJust::Ax1, imp(prev, imp(s.antecedent.front(), prev)));
      mapped = hb.mp(pline(0), a1);
    } else if (rule == "thin-back") {
      // lift A => (P => A) through the old context
      const Sequent& p = prem(0);
      Fptr a = p.succedent;
      int t = hb.schema(HilbertJust::Ax1, imp(a, imp(s.antecedent.back(), a)));
      int cur = t;
      for (auto it = p.antecedent.rbegin(); it != p.antecedent.rend(); ++it)
        cur = hb.mono_step(cur, *it);
      mapped = hb.mp(pline(0), cur);
    } else if (rule == "imp-intro") {
      mapped = m.at(line.just.premises[0]);  // same exported formula
    } else if (rule == "imp-elim") {
      const Sequent& pj = prem(1);
      mapped = hb.apply_under(s.antecedent, pline(1), pline(0), pj.succedent->lhs,
                              pj.succedent->rhs);
    } else if (rule == "raa") {
      Fptr np = prem(0).antecedent.back();
      Fptr q = prem(0).succedent;
      Fptr x = imp(np, q);
      Fptr y = imp(imp(np, Formula::neg(q)), s.succedent);
      int t = hb.schema(HilbertJust::Ax3Prime, imp(x, y));
      int w = hb.weaken_under(s.antecedent, t);
      int m1 = hb.apply_under(s.antecedent, w, pline(0), x, y);
      mapped = hb.apply_under(s.antecedent, m1, pline(1), y->lhs, y->rhs);
    } else {
      throw ElaborationError("wrong-shape", "rule '" + rule + "' has no Hilbert image");
    }
    m[line.number] = mapped;
  }
  if (strict.lines.empty()) throw ElaborationError("wrong-shape", "empty script");
  // declare the conclusion's antecedent members as hypotheses and peel them off
  const Sequent& concl = strict.lines.back().sequent;
  for (const auto& d : concl.antecedent) {
    bool seen = false;
    for (const auto& h : hb.hypotheses) seen = seen || same(h, d);
    if (!seen) hb.hypotheses.push_back(d);
  }
  int cur = m.at(strict.lines.back().number);
  for (const auto& d : concl.antecedent) {
    int idx = 0;
    for (size_t i = 0; i < hb.hypotheses.size(); ++i)
      if (same(hb.hypotheses[i], d)) { idx = static_cast<int>(i) + 1; break; }
    int h = hb.hyp(idx);
    cur = hb.mp(h, cur);
  }
  hb.finalize(cur);
  return hb.take();
}

HilbertScript derive_ax3_in_hl3(const Fptr& p, const Fptr& q) {
  HilbertBuilder hb(SystemId::HL3);
  Fptr np = neg(p), nq = neg(q);
  hb.hypotheses = {imp(np, nq), q};
  int h2 = hb.hyp(2);
  int a1 = hb.schema(HilbertJust::Ax1, imp(q, imp(np, q)));
  int m1 = hb.mp(h2, a1);  // ~P => Q
  int ax = hb.schema(HilbertJust::Ax3Prime, imp(imp(np, q), imp(imp(np, nq), p)));
  int m2 = hb.mp(m1, ax);
  int h1 = hb.hyp(1);
  hb.mp(h1, m2);  // P
  return deduction_theorem(deduction_theorem(hb.take()));
}

namespace {

// |- ~Q => (Q => ~(P => P)), the lemma of the interderivability exercise,
// derived in HLT by discharging the hypotheses ~Q, Q.
HilbertScript contradiction_lemma(const Fptr& p, const Fptr& q) {
  HilbertBuilder hb(SystemId::HLT);
  Fptr nq = neg(q);
  Fptr r = neg(imp(p, p));
  hb.hypotheses = {nq, q};
  int h1 = hb.hyp(1);
  int a1 = hb.schema(HilbertJust::Ax1, imp(nq, imp(neg(r), nq)));
  int m1 = hb.mp(h1, a1);  // ~R => ~Q
  int ax = hb.schema(HilbertJust::Ax3, imp(imp(neg(r), nq), imp(q, r)));
  int m2 = hb.mp(m1, ax);  // Q => R
  int h2 = hb.hyp(2);
  hb.mp(h2, m2);  // R
  return deduction_theorem(deduction_theorem(hb.take()));
}

}  // namespace

HilbertScript derive_ax3prime_in_hlt(const Fptr& p, const Fptr& q) {
  HilbertScript lemma = contradiction_lemma(p, q);
  Fptr np = neg(p), nq = neg(q);
  Fptr pp = imp(p, p);
  HilbertBuilder hb(SystemId::HLT);
  hb.hypotheses = {imp(np, q), imp(np, nq), np};
  // replay the lemma (a theorem, so hypothesis indices are not involved)
  std::map<int, int> lm;
  for (const auto& l : lemma.lines) {
    if (l.just.kind == HilbertJust::Mp)
      lm[l.number] = hb.mp(lm.at(l.just.ref_a), lm.at(l.just.ref_b));
    else
      lm[l.number] = hb.schema(l.just.kind, l.formula);
  }
  int lemma_line = lm.at(lemma.lines.back().number);  // ~Q => (Q => ~(P=>P))
  int h3 = hb.hyp(3);
  int h1 = hb.hyp(1);
  int mq = hb.mp(h3, h1);   // Q
  int h2 = hb.hyp(2);
  int mnq = hb.mp(h3, h2);  // ~Q
  int m1 = hb.mp(mnq, lemma_line);
  int m2 = hb.mp(mq, m1);   // ~(P => P)
  // discharge ~P, then finish with ax3 and P => P
  HilbertScript sub = deduction_theorem(hb.take());  // proves ~P => ~(P=>P)
  HilbertBuilder hb2(SystemId::HLT);
  hb2.hypotheses = sub.hypotheses;  // ~P => Q, ~P => ~Q
  std::map<int, int> sm;
  for (const auto& l : sub.lines) {
    switch (l.just.kind) {
      case HilbertJust::Mp:
        sm[l.number] = hb2.mp(sm.at(l.just.ref_a), sm.at(l.just.ref_b));
        break;
      case HilbertJust::Hyp:
        sm[l.number] = hb2.hyp(l.just.ref_a);
        break;
      default:
        sm[l.number] = hb2.schema(l.just.kind, l.formula);
    }
  }
  int npnpp = sm.at(sub.lines.back().number);  // ~P => ~(P => P)
  int ax = hb2.schema(HilbertJust::Ax3, imp(imp(np, neg(pp)), imp(pp, p)));
  int m3 = hb2.mp(npnpp, ax);  // (P => P) => P
  int ppl = hb2.p_imp_p(p);
  hb2.mp(ppl, m3);  // P
  (void)m2;
  return deduction_theorem(deduction_theorem(hb2.take()));
}

}  // namespace gnd
