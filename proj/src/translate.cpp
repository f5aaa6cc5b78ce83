#include "gnd/translate.hpp"

#include <map>

#include "gnd/derived.hpp"
#include "gnd/parse.hpp"

namespace gnd {

namespace {

[[noreturn]] void internal_fail(const std::string& detail) {
  throw ElaborationError("internal", detail);
}

int thin_to(ProofBuilder& b, int line, const std::vector<Fptr>& ctx) {
  const Sequent& cur = b.sequent_of(line);
  if (cur.antecedent.size() == ctx.size()) return line;
  return b.macro("thin", {line}, Sequent{ctx, cur.succedent});
}

int proj_at(ProofBuilder& b, const std::vector<Fptr>& ctx, const Fptr& f) {
  return b.macro("proj", {}, Sequent{ctx, f});
}

// Delta -> ~(A => ~B) from Delta -> A and Delta -> B (the G image of
// conjunction introduction under CtoG).
int g_conj_intro(ProofBuilder& b, int line_a, int line_b) {
  const Sequent pa = b.sequent_of(line_a);
  const Sequent pb = b.sequent_of(line_b);
  Fptr x = Formula::imp(pa.succedent, Formula::neg(pb.succedent));
  std::vector<Fptr> ctx = pa.antecedent;
  ctx.push_back(x);
  int pf = proj_at(b, ctx, x);
  int ta = thin_to(b, line_a, ctx);
  int pe = b.imp_elim(ta, pf);                 // Delta, X -> ~B
  int tb = thin_to(b, line_b, ctx);            // Delta, X -> B
  return b.macro("weak-raa", {tb, pe}, Sequent{pa.antecedent, Formula::neg(x)});
}

// Delta -> A from Delta -> ~(A => ~B).
int g_conj_elim_l(ProofBuilder& b, int line) {
  const Sequent p = b.sequent_of(line);
  const Fptr& s = p.succedent;
  if (s->kind != Conn::Neg || s->lhs->kind != Conn::Imp || s->lhs->rhs->kind != Conn::Neg)
    internal_fail("translated conjunction has an unexpected shape");
  Fptr a = s->lhs->lhs;
  Fptr bb = s->lhs->rhs->lhs;
  Fptr na = Formula::neg(a);
  std::vector<Fptr> ctx2 = p.antecedent;
  ctx2.push_back(na);
  std::vector<Fptr> ctx3 = ctx2;
  ctx3.push_back(a);
  int pa = proj_at(b, ctx3, a);
  int pn = proj_at(b, ctx3, na);
  int exc = b.macro("excontra", {pa, pn}, Sequent{ctx3, Formula::neg(bb)});
  int ii = b.imp_intro(exc);                   // Delta, ~A -> A => ~B
  int tp = thin_to(b, line, ctx2);             // Delta, ~A -> ~(A => ~B)
  return b.raa(ii, tp);                        // Delta -> A
}

// Delta -> B from Delta -> ~(A => ~B).
int g_conj_elim_r(ProofBuilder& b, int line) {
  const Sequent p = b.sequent_of(line);
  const Fptr& s = p.succedent;
  if (s->kind != Conn::Neg || s->lhs->kind != Conn::Imp || s->lhs->rhs->kind != Conn::Neg)
    internal_fail("translated conjunction has an unexpected shape");
  Fptr a = s->lhs->lhs;
  Fptr bb = s->lhs->rhs->lhs;
  Fptr nb = Formula::neg(bb);
  std::vector<Fptr> ctx2 = p.antecedent;
  ctx2.push_back(nb);
  std::vector<Fptr> ctx3 = ctx2;
  ctx3.push_back(a);
  int pn = proj_at(b, ctx3, nb);
  int ii = b.imp_intro(pn);                    // Delta, ~B -> A => ~B
  int tp = thin_to(b, line, ctx2);             // Delta, ~B -> ~(A => ~B)
  return b.raa(ii, tp);                        // Delta -> B
}

// Delta -> P from Delta, P => F -> F where F is the G image of falsum.
int g_raa_bot(ProofBuilder& b, int line, const Sequent& target) {
  const Sequent pi = b.sequent_of(line);
  Fptr pf = target.succedent;
  Fptr falsum_img = pi.succedent;              // ~(p => p)
  Fptr np = Formula::neg(pf);
  std::vector<Fptr> delta = target.antecedent;
  std::vector<Fptr> ctx_np = delta;
  ctx_np.push_back(np);
  std::vector<Fptr> ctx3 = ctx_np;
  ctx3.push_back(pf);
  int pa = proj_at(b, ctx3, pf);
  int pn = proj_at(b, ctx3, np);
  int exc = b.macro("excontra", {pa, pn}, Sequent{ctx3, falsum_img});
  int a = b.imp_intro(exc);                    // Delta, ~P -> P => F
  int it = b.imp_intro(line);                  // Delta -> (P => F) => F
  int tb = b.thin_back(it, np);                // Delta, ~P -> (P => F) => F
  int fe = b.imp_elim(a, tb);                  // Delta, ~P -> F
  if (falsum_img->kind != Conn::Neg) internal_fail("falsum image has an unexpected shape");
  int axp = b.axiom(falsum_img->lhs->lhs);     // p -> p
  int ip = b.imp_intro(axp);                   // -> p => p
  int dn = b.macro("dn-intro", {ip},
                   Sequent{{}, Formula::neg(Formula::neg(falsum_img->lhs))});
  int tn = thin_to(b, dn, ctx_np);             // Delta, ~P -> ~F
  return b.raa(fe, tn);                        // Delta -> P
}

}  // namespace

SystemId translation_source(TranslationId t) {
  switch (t) {
    case TranslationId::GtoC:
    case TranslationId::GtoGBot: return SystemId::G;
    case TranslationId::CtoG: return SystemId::C;
    case TranslationId::GBotToG: return SystemId::GBot;
  }
  return SystemId::G;
}

SystemId translation_target(TranslationId t) {
  switch (t) {
    case TranslationId::GtoC: return SystemId::C;
    case TranslationId::GtoGBot: return SystemId::GBot;
    case TranslationId::CtoG:
    case TranslationId::GBotToG: return SystemId::G;
  }
  return SystemId::G;
}

bool translation_for(SystemId from, SystemId to, TranslationId& out) {
  if (from == SystemId::G && to == SystemId::C) out = TranslationId::GtoC;
  else if (from == SystemId::G && to == SystemId::GBot) out = TranslationId::GtoGBot;
  else if (from == SystemId::C && to == SystemId::G) out = TranslationId::CtoG;
  else if (from == SystemId::GBot && to == SystemId::G) out = TranslationId::GBotToG;
  else return false;
  return true;
}

Fptr translate_formula(TranslationId t, const Fptr& f) {
  if (!in_alphabet(translation_source(t), f))
    throw ElaborationError("out-of-alphabet",
                           "formula '" + print_formula(f) + "' is not in the alphabet of " +
                               system_name(translation_source(t)));
  switch (f->kind) {
    case Conn::Var:
      return f;
    case Conn::Neg: {
      Fptr body = translate_formula(t, f->lhs);
      if (t == TranslationId::GtoGBot) return Formula::imp(body, Formula::falsum());
      return Formula::neg(body);
    }
    case Conn::Imp: {
      Fptr l = translate_formula(t, f->lhs);
      Fptr r = translate_formula(t, f->rhs);
      if (t == TranslationId::GtoC) return Formula::neg(Formula::conj(l, Formula::neg(r)));
      return Formula::imp(l, r);
    }
    case Conn::Conj: {
      Fptr l = translate_formula(t, f->lhs);
      Fptr r = translate_formula(t, f->rhs);
      return Formula::neg(Formula::imp(l, Formula::neg(r)));  // CtoG only
    }
    case Conn::Falsum: {
      Fptr p = Formula::var("p");
      return Formula::neg(Formula::imp(p, p));  // GBotToG only
    }
  }
  return f;
}

Sequent translate_sequent(TranslationId t, const Sequent& s) {
  Sequent out;
  for (const auto& f : s.antecedent) out.antecedent.push_back(translate_formula(t, f));
  out.succedent = translate_formula(t, s.succedent);
  return out;
}

ProofScript translate_proof(TranslationId t, const ProofScript& script) {
  if (script.system != translation_source(t))
    throw ElaborationError("wrong-system", "script system does not match the translation source");
  ProofScript strict = elaborate_script(script);
  ProofBuilder b(translation_target(t), Mode::Macro);
  std::map<int, int> m;
  for (const auto& line : strict.lines) {
    Sequent ts = translate_sequent(t, line.sequent);
    const std::string& rule = line.just.rule;
    auto ref = [&](size_t k) { return m.at(line.just.premises[k]); };
    int mapped;
    if (rule == "premise") {
      mapped = b.premise(ts);
    } else if (rule == "axiom") {
      mapped = b.axiom(ts.succedent);
    } else if (rule == "thin-front") {
      mapped = b.thin_front(ref(0), ts.antecedent.front());
    } else if (rule == "thin-back") {
      mapped = b.thin_back(ref(0), ts.antecedent.back());
    } else if (rule == "imp-intro") {
      mapped = t == TranslationId::GtoC ? b.macro("c-imp-intro", {ref(0)}, ts)
                                        : b.imp_intro(ref(0));
    } else if (rule == "imp-elim") {
      mapped = t == TranslationId::GtoC ? b.macro("c-imp-elim", {ref(0), ref(1)}, ts)
                                        : b.imp_elim(ref(0), ref(1));
    } else if (rule == "raa") {
      if (t == TranslationId::GtoGBot) {
        int fe = b.imp_elim(ref(0), ref(1));  // Delta, P => # -> #
        mapped = b.raa_bot(fe);
      } else {
        mapped = b.raa(ref(0), ref(1));
      }
    } else if (rule == "raa-bot") {
      mapped = g_raa_bot(b, ref(0), ts);
    } else if (rule == "conj-intro") {
      mapped = g_conj_intro(b, ref(0), ref(1));
    } else if (rule == "conj-elim-l") {
      mapped = g_conj_elim_l(b, ref(0));
    } else if (rule == "conj-elim-r") {
      mapped = g_conj_elim_r(b, ref(0));
    } else if (rule == "cut") {
      mapped = b.macro("cut*", {ref(0), ref(1)}, ts);
    } else if (rule == "raa-short") {
      int el = g_conj_elim_l(b, ref(0));
      int er = g_conj_elim_r(b, ref(0));
      mapped = b.raa(el, er);
    } else {
      internal_fail("untranslatable rule '" + rule + "'");
    }
    if (!(b.sequent_of(mapped) == ts))
      internal_fail("translated line " + std::to_string(line.number) +
                    " concludes the wrong sequent");
    m[line.number] = mapped;
  }
  return b.take_script();
}

}  // namespace gnd
