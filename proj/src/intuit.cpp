#include "gnd/intuit.hpp"

#include <vector>

namespace gnd {

namespace {

bool is_atom(const Fptr& f) { return f->kind == Conn::Var || f->kind == Conn::Falsum; }

bool member(const std::vector<Fptr>& ctx, const Fptr& f) {
  for (const auto& g : ctx)
    if (same(g, f)) return true;
  return false;
}

// Backward search in the contraction-free calculus: implications on the left
// are decomposed by the shape of their antecedents, so every rule strictly
// shrinks a weight and the recursion terminates without loop checks.
bool search(std::vector<Fptr> ctx, Fptr goal) {
  // saturate the non-branching left rules
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < ctx.size(); ++i) {
      const Fptr f = ctx[i];
      if (f->kind == Conn::Falsum) return true;
      if (f->kind == Conn::Conj) {
        ctx.erase(ctx.begin() + i);
        ctx.push_back(f->lhs);
        ctx.push_back(f->rhs);
        changed = true;
        break;
      }
      if (f->kind == Conn::Imp) {
        const Fptr& a = f->lhs;
        if (a->kind == Conn::Falsum) {
          ctx.erase(ctx.begin() + i);  // # => B carries no content
          changed = true;
          break;
        }
        if (a->kind == Conn::Var && member(ctx, a)) {
          Fptr body = f->rhs;
          ctx.erase(ctx.begin() + i);
          ctx.push_back(body);
          changed = true;
          break;
        }
        if (a->kind == Conn::Conj) {
          Fptr curried = Formula::imp(a->lhs, Formula::imp(a->rhs, f->rhs));
          ctx.erase(ctx.begin() + i);
          ctx.push_back(curried);
          changed = true;
          break;
        }
      }
    }
  }

  // invertible right rules
  if (goal->kind == Conn::Conj)
    return search(ctx, goal->lhs) && search(ctx, goal->rhs);
  if (goal->kind == Conn::Imp) {
    ctx.push_back(goal->lhs);
    return search(std::move(ctx), goal->rhs);
  }

  if (goal->kind == Conn::Var && member(ctx, goal)) return true;

  // (C => D) => B on the left: the one branching, non-invertible case
  for (size_t i = 0; i < ctx.size(); ++i) {
    const Fptr f = ctx[i];
    if (f->kind != Conn::Imp || f->lhs->kind != Conn::Imp) continue;
    const Fptr& cd = f->lhs;
    std::vector<Fptr> rest = ctx;
    rest.erase(rest.begin() + i);
    std::vector<Fptr> left = rest;
    left.push_back(Formula::imp(cd->rhs, f->rhs));
    if (search(std::move(left), cd)) {
      std::vector<Fptr> right = rest;
      right.push_back(f->rhs);
      if (search(std::move(right), goal)) return true;
    }
  }
  return false;
}

}  // namespace

Fptr eliminate_negation(const Fptr& f) {
  switch (f->kind) {
    case Conn::Var:
    case Conn::Falsum:
      return f;
    case Conn::Neg:
      return Formula::imp(eliminate_negation(f->lhs), Formula::falsum());
    case Conn::Imp:
      return Formula::imp(eliminate_negation(f->lhs), eliminate_negation(f->rhs));
    case Conn::Conj:
      return Formula::conj(eliminate_negation(f->lhs), eliminate_negation(f->rhs));
  }
  return f;
}

bool int_provable(const Fptr& f) { return search({}, eliminate_negation(f)); }

}  // namespace gnd
