#include "mqc/reduction.hpp"

namespace mqc {

namespace {

// Contract a redex at the root, if there is one.
std::optional<TermPtr> contract(const TermPtr& p) {
  if (auto* a = std::get_if<Term::App>(&p->node)) {
    if (auto* l = std::get_if<Term::Lam>(&a->fn->node))
      return subst_proof(l->body, l->var, a->arg);
  } else if (auto* pj = std::get_if<Term::Proj>(&p->node)) {
    if (auto* pr = std::get_if<Term::Pair>(&pj->arg->node))
      return pj->index == 1 ? pr->first : pr->second;
  } else if (auto* c = std::get_if<Term::Case>(&p->node)) {
    if (auto* in = std::get_if<Term::Inj>(&c->scrutinee->node))
      return in->index == 1 ? subst_proof(c->left_body, c->left_var, in->arg)
                            : subst_proof(c->right_body, c->right_var, in->arg);
  } else if (auto* ia = std::get_if<Term::IApp>(&p->node)) {
    if (auto* g = std::get_if<Term::Gen>(&ia->fn->node))
      return subst_ind_term(g->body, g->var, ia->arg);
  } else if (auto* d = std::get_if<Term::Dest>(&p->node)) {
    if (auto* w = std::get_if<Term::Wit>(&d->scrutinee->node))
      return subst_proof(subst_ind_term(d->body, d->ind_var, w->witness),
                         d->proof_var, w->body);
  }
  return std::nullopt;
}

// Step inside p by rewriting the first child (in the given visit order)
// that steps; returns the rebuilt term.
template <typename StepFn>
std::optional<TermPtr> step_children(const TermPtr& p, StepFn recur) {
  return std::visit(
      overloaded{
          [&](const Term::Var&) -> std::optional<TermPtr> {
            return std::nullopt;
          },
          [&](const Term::Lam& n) -> std::optional<TermPtr> {
            if (auto b = recur(n.body)) return lam(n.var, *b);
            return std::nullopt;
          },
          [&](const Term::App& n) -> std::optional<TermPtr> {
            if (auto f = recur(n.fn)) return app(*f, n.arg);
            if (auto a = recur(n.arg)) return app(n.fn, *a);
            return std::nullopt;
          },
          [&](const Term::Pair& n) -> std::optional<TermPtr> {
            if (auto a = recur(n.first)) return pair(*a, n.second);
            if (auto b = recur(n.second)) return pair(n.first, *b);
            return std::nullopt;
          },
          [&](const Term::Proj& n) -> std::optional<TermPtr> {
            if (auto a = recur(n.arg)) return proj(n.index, *a);
            return std::nullopt;
          },
          [&](const Term::Inj& n) -> std::optional<TermPtr> {
            if (auto a = recur(n.arg)) return inj(n.index, *a);
            return std::nullopt;
          },
          [&](const Term::Case& n) -> std::optional<TermPtr> {
            if (auto s = recur(n.scrutinee))
              return kase(*s, n.left_var, n.left_body, n.right_var,
                          n.right_body);
            if (auto l = recur(n.left_body))
              return kase(n.scrutinee, n.left_var, *l, n.right_var,
                          n.right_body);
            if (auto r = recur(n.right_body))
              return kase(n.scrutinee, n.left_var, n.left_body, n.right_var,
                          *r);
            return std::nullopt;
          },
          [&](const Term::Gen& n) -> std::optional<TermPtr> {
            if (auto b = recur(n.body)) return gen(n.var, *b);
            return std::nullopt;
          },
          [&](const Term::IApp& n) -> std::optional<TermPtr> {
            if (auto f = recur(n.fn)) return iapp(*f, n.arg);
            return std::nullopt;
          },
          [&](const Term::Wit& n) -> std::optional<TermPtr> {
            if (auto b = recur(n.body)) return wit(n.witness, *b);
            return std::nullopt;
          },
          [&](const Term::Dest& n) -> std::optional<TermPtr> {
            if (auto s = recur(n.scrutinee))
              return dest(*s, n.ind_var, n.proof_var, n.body);
            if (auto b = recur(n.body))
              return dest(n.scrutinee, n.ind_var, n.proof_var, *b);
            return std::nullopt;
          },
      },
      p->node);
}

}  // namespace

std::optional<TermPtr> step(const TermPtr& p) {
  if (auto r = contract(p)) return r;
  return step_children(p, [](const TermPtr& q) { return step(q); });
}

std::optional<TermPtr> step_innermost(const TermPtr& p) {
  // Children last-to-first, so the rightmost innermost redex fires.
  auto reversed = std::visit(
      overloaded{
          [&](const Term::App& n) -> std::optional<TermPtr> {
            if (auto a = step_innermost(n.arg)) return app(n.fn, *a);
            if (auto f = step_innermost(n.fn)) return app(*f, n.arg);
            return std::nullopt;
          },
          [&](const Term::Pair& n) -> std::optional<TermPtr> {
            if (auto b = step_innermost(n.second)) return pair(n.first, *b);
            if (auto a = step_innermost(n.first)) return pair(*a, n.second);
            return std::nullopt;
          },
          [&](const Term::Case& n) -> std::optional<TermPtr> {
            if (auto r = step_innermost(n.right_body))
              return kase(n.scrutinee, n.left_var, n.left_body, n.right_var,
                          *r);
            if (auto l = step_innermost(n.left_body))
              return kase(n.scrutinee, n.left_var, *l, n.right_var,
                          n.right_body);
            if (auto s = step_innermost(n.scrutinee))
              return kase(*s, n.left_var, n.left_body, n.right_var,
                          n.right_body);
            return std::nullopt;
          },
          [&](const Term::Dest& n) -> std::optional<TermPtr> {
            if (auto b = step_innermost(n.body))
              return dest(n.scrutinee, n.ind_var, n.proof_var, *b);
            if (auto s = step_innermost(n.scrutinee))
              return dest(*s, n.ind_var, n.proof_var, n.body);
            return std::nullopt;
          },
          [&](const auto&) -> std::optional<TermPtr> {
            return step_children(
                p, [](const TermPtr& q) { return step_innermost(q); });
          },
      },
      p->node);
  if (reversed) return reversed;
  return contract(p);
}

bool has_redex(const TermPtr& p) {
  if (contract(p)) return true;
  bool found = false;
  auto probe = [&](const TermPtr& q) -> std::optional<TermPtr> {
    if (!found && has_redex(q)) found = true;
    return std::nullopt;
  };
  step_children(p, probe);
  return found;
}

namespace {

template <typename StepFn>
TermPtr iterate(const TermPtr& p, long fuel, StepFn one) {
  TermPtr cur = p;
  for (long i = 0; i < fuel; ++i) {
    auto next = one(cur);
    if (!next) return cur;
    cur = *next;
  }
  if (!one(cur)) return cur;
  throw FuelExhausted();
}

}  // namespace

TermPtr beta_nf(const TermPtr& p, long fuel) {
  return iterate(p, fuel, [](const TermPtr& q) { return step(q); });
}

TermPtr beta_nf_innermost(const TermPtr& p, long fuel) {
  return iterate(p, fuel, [](const TermPtr& q) { return step_innermost(q); });
}

bool beta_eq(const TermPtr& p, const TermPtr& q, long fuel) {
  return alpha_eq(beta_nf(p, fuel), beta_nf(q, fuel));
}

}  // namespace mqc
