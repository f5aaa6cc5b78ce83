#include "gnd/completeness.hpp"

#include <algorithm>

#include "gnd/derived.hpp"

namespace gnd {

namespace {

Fptr literal(const std::string& name, bool value) {
  Fptr v = Formula::var(name);
  return value ? v : Formula::neg(v);
}

std::vector<Fptr> literals_of(const Valuation& v) {
  std::vector<Fptr> out;
  for (const auto& [name, value] : v) out.push_back(literal(name, value));
  return out;
}

int emit_proj_line(ProofBuilder& b, const std::vector<Fptr>& ctx, const Fptr& f) {
  return b.macro("proj", {}, Sequent{ctx, f});
}

int emit_thin_line(ProofBuilder& b, int line, const std::vector<Fptr>& ctx) {
  const Sequent& cur = b.sequent_of(line);
  if (cur.antecedent.size() == ctx.size()) return line;
  return b.macro("thin", {line}, Sequent{ctx, cur.succedent});
}

// Line proving L -> f when f holds under v, else L -> ~f, with L = literals(v).
int kalmar_emit(ProofBuilder& b, const Fptr& f, const Valuation& v, const std::vector<Fptr>& L) {
  bool tv = evaluate(f, v);
  switch (f->kind) {
    case Conn::Var:
      return emit_proj_line(b, L, tv ? f : Formula::neg(f));
    case Conn::Neg: {
      int inner = kalmar_emit(b, f->lhs, v, L);
      if (tv) return inner;  // inner already proves L -> ~body == L -> f
      return b.macro("dn-intro", {inner},
                     Sequent{L, Formula::neg(Formula::neg(f->lhs))});
    }
    case Conn::Imp: {
      const Fptr& a = f->lhs;
      const Fptr& c = f->rhs;
      if (evaluate(c, v)) {
        int lc = kalmar_emit(b, c, v, L);   // L -> c
        int t = b.thin_back(lc, a);         // L, a -> c
        return b.imp_intro(t);              // L -> a => c
      }
      if (!evaluate(a, v)) {
        // false antecedent: anything follows, via indirect proof
        int la = kalmar_emit(b, a, v, L);   // L -> ~a
        std::vector<Fptr> ctx = L;
        ctx.push_back(a);
        ctx.push_back(Formula::neg(c));
        int p1 = emit_proj_line(b, ctx, a);
        int p2 = emit_thin_line(b, la, ctx);
        int r = b.raa(p1, p2);              // L, a -> c
        return b.imp_intro(r);              // L -> a => c
      }
      // a true, c false: refute the implication
      int la = kalmar_emit(b, a, v, L);     // L -> a
      int lc = kalmar_emit(b, c, v, L);     // L -> ~c
      std::vector<Fptr> ctx = L;
      ctx.push_back(f);
      int pf = emit_proj_line(b, ctx, f);
      int pa = emit_thin_line(b, la, ctx);
      int pe = b.imp_elim(pa, pf);          // L, a=>c -> c
      int pn = emit_thin_line(b, lc, ctx);  // L, a=>c -> ~c
      return b.macro("weak-raa", {pe, pn}, Sequent{L, Formula::neg(f)});
    }
    default:
      throw ElaborationError("out-of-alphabet", "formula outside G's alphabet");
  }
}

struct Prover {
  ProofBuilder b{SystemId::G, Mode::Macro};
  const Sequent& goal;
  std::vector<std::string> vars;

  explicit Prover(const Sequent& s) : goal(s) {
    vars = vars_of(s);
    std::sort(vars.begin(), vars.end());
  }

  // Line proving literals(v), Delta -> P for a full valuation v.
  int base_line(const Valuation& v) {
    std::vector<Fptr> L = literals_of(v);
    std::vector<Fptr> ctx = L;
    ctx.insert(ctx.end(), goal.antecedent.begin(), goal.antecedent.end());
    if (evaluate(goal.succedent, v)) {
      int k = kalmar_emit(b, goal.succedent, v, L);
      return emit_thin_line(b, k, ctx);
    }
    for (const auto& d : goal.antecedent) {
      if (!evaluate(d, v)) {
        int k = kalmar_emit(b, d, v, L);  // L -> ~d
        int t = emit_thin_line(b, k, ctx);
        int pr = emit_proj_line(b, ctx, d);
        return b.macro("excontra", {pr, t}, Sequent{ctx, goal.succedent});
      }
    }
    throw ElaborationError("internal", "valuation satisfies premises but not the succedent");
  }

  // Moves the antecedent element at `pos` to the end with adjacent swaps.
  int move_to_end(int line, size_t pos) {
    int cur = line;
    while (true) {
      const Sequent& s = b.sequent_of(cur);
      if (pos + 1 >= s.antecedent.size()) return cur;
      Sequent next = s;
      std::swap(next.antecedent[pos], next.antecedent[pos + 1]);
      cur = b.macro("perm", {cur}, next);
      ++pos;
    }
  }

  // Splits on vars[idx..], assuming vars[0..idx) already fixed in `v`;
  // returns a line proving lits(v[0..idx)), Delta -> P.
  int discharge(size_t idx, Valuation& v) {
    if (idx == vars.size()) return base_line(v);
    v[vars[idx]] = true;
    int lt = discharge(idx + 1, v);
    v[vars[idx]] = false;
    int lf = discharge(idx + 1, v);
    v.erase(vars[idx]);
    lt = move_to_end(lt, idx);
    lf = move_to_end(lf, idx);
    Sequent concl = b.sequent_of(lt);
    concl.antecedent.pop_back();
    return b.macro("case", {lt, lf}, concl);
  }
};

}  // namespace

ProofScript kalmar_line(const Fptr& f, const Valuation& v) {
  for (const auto& name : vars_of(f))
    if (!v.count(name)) throw std::out_of_range("valuation missing variable '" + name + "'");
  ProofBuilder b(SystemId::G, Mode::Macro);
  kalmar_emit(b, f, v, literals_of(v));
  return b.take_script();
}

ProveResult prove(const Sequent& s) {
  ProveResult res;
  if (auto cm = sequent_valid(s)) {
    res.countermodel = *cm;
    return res;
  }
  Prover prover(s);
  Valuation v;
  prover.discharge(0, v);
  res.script = prover.b.take_script();
  return res;
}

}  // namespace gnd
