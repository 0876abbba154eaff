#include "mqc/typecheck.hpp"

#include "mqc/print.hpp"

namespace mqc {

TypeError::TypeError(Kind kind, std::string message, TermPtr subterm,
                     FormulaPtr expected, FormulaPtr actual)
    : std::runtime_error(std::move(message)),
      kind(kind),
      subterm(std::move(subterm)),
      expected(std::move(expected)),
      actual(std::move(actual)) {}

namespace {

[[noreturn]] void fail(TypeError::Kind kind, const std::string& msg,
                       TermPtr subterm = nullptr, FormulaPtr expected = nullptr,
                       FormulaPtr actual = nullptr) {
  throw TypeError(kind, msg, std::move(subterm), std::move(expected),
                  std::move(actual));
}

void scope_check(const Context& ctx, const TermPtr& p,
                 const std::set<std::string>& extra_proof = {},
                 const std::set<std::string>& extra_ind = {}) {
  for (const auto& a : free_proof_vars(p))
    if (!ctx.has_hypothesis(a) && !extra_proof.count(a))
      fail(TypeError::Kind::UnboundVariable,
           "unbound proof variable '" + a + "'", p);
  for (const auto& x : free_ind_vars(p))
    if (!ctx.ind_vars.count(x) && !extra_ind.count(x))
      fail(TypeError::Kind::ScopeError,
           "individual variable '" + x + "' not in scope", p);
}

void scope_check_individual(const Context& ctx, const Individual& t,
                            const TermPtr& where) {
  if (!ctx.has_individual(t))
    fail(TypeError::Kind::ScopeError,
         "individual '" + t.name + "' not in scope", where);
}

// Renames a proof binder that would collide with an existing hypothesis.
std::pair<std::string, TermPtr> fresh_proof_binder(const Context& ctx,
                                                   const std::string& v,
                                                   const TermPtr& body) {
  if (!ctx.has_hypothesis(v)) return {v, body};
  auto avoid = ctx.all_names();
  auto pf = free_proof_vars(body);
  avoid.insert(pf.begin(), pf.end());
  std::string v2 = avoid_name(v, avoid);
  return {v2, subst_proof(body, v, var(v2))};
}

// Renames an individual binder so the Table 1 x-fresh side condition holds.
std::pair<std::string, TermPtr> fresh_ind_binder(const Context& ctx,
                                                 const std::string& x,
                                                 const TermPtr& body) {
  if (!ctx.ind_vars.count(x) && !ctx.constants.count(x)) return {x, body};
  auto avoid = ctx.all_names();
  auto iv = free_ind_vars(body);
  avoid.insert(iv.begin(), iv.end());
  std::string x2 = avoid_name(x, avoid);
  return {x2, subst_ind_term(body, x, ivar(x2))};
}

void check_impl(const Context& ctx, const TermPtr& p, const FormulaPtr& goal);
FormulaPtr infer_impl(const Context& ctx, const TermPtr& e);

// One weak-head beta step, used to type unannotated redexes through their
// contractum. Discarded subterms (a dropped argument, the dead branch of a
// case on an injection) have no formula without annotations; they are
// scope-checked only. Recurses into head positions so stacked redexes
// such as ((fun a => a) (fun b => b)) q unwind.
std::optional<TermPtr> whstep(const Context& ctx, const TermPtr& p) {
  if (auto* a = std::get_if<Term::App>(&p->node)) {
    if (auto* l = std::get_if<Term::Lam>(&a->fn->node)) {
      scope_check(ctx, a->arg);
      return subst_proof(l->body, l->var, a->arg);
    }
    if (auto f = whstep(ctx, a->fn)) return app(*f, a->arg);
  } else if (auto* pj = std::get_if<Term::Proj>(&p->node)) {
    if (auto* pr = std::get_if<Term::Pair>(&pj->arg->node)) {
      scope_check(ctx, pj->index == 1 ? pr->second : pr->first);
      return pj->index == 1 ? pr->first : pr->second;
    }
    if (auto q = whstep(ctx, pj->arg)) return proj(pj->index, *q);
  } else if (auto* c = std::get_if<Term::Case>(&p->node)) {
    if (auto* ij = std::get_if<Term::Inj>(&c->scrutinee->node)) {
      scope_check(ctx, ij->index == 1 ? c->right_body : c->left_body,
                  {ij->index == 1 ? c->right_var : c->left_var});
      return ij->index == 1
                 ? subst_proof(c->left_body, c->left_var, ij->arg)
                 : subst_proof(c->right_body, c->right_var, ij->arg);
    }
    if (auto s = whstep(ctx, c->scrutinee))
      return kase(*s, c->left_var, c->left_body, c->right_var, c->right_body);
  } else if (auto* ia = std::get_if<Term::IApp>(&p->node)) {
    if (auto* g = std::get_if<Term::Gen>(&ia->fn->node)) {
      scope_check_individual(ctx, ia->arg, p);
      return subst_ind_term(g->body, g->var, ia->arg);
    }
    if (auto f = whstep(ctx, ia->fn)) return iapp(*f, ia->arg);
  } else if (auto* d = std::get_if<Term::Dest>(&p->node)) {
    if (auto* w = std::get_if<Term::Wit>(&d->scrutinee->node)) {
      scope_check_individual(ctx, w->witness, p);
      scope_check(ctx, w->body);
      return subst_proof(subst_ind_term(d->body, d->ind_var, w->witness),
                         d->proof_var, w->body);
    }
    if (auto s = whstep(ctx, d->scrutinee))
      return dest(*s, d->ind_var, d->proof_var, d->body);
  }
  return std::nullopt;
}

void check_same(const FormulaPtr& actual, const FormulaPtr& expected,
                const TermPtr& where) {
  if (!alpha_eq_formula(actual, expected))
    fail(TypeError::Kind::ShapeMismatch,
         "expected " + print_formula(expected) + ", found " +
             print_formula(actual) + " for " + print_term(where),
         where, expected, actual);
}

FormulaPtr infer_impl(const Context& ctx, const TermPtr& e) {
  if (auto r = whstep(ctx, e)) return infer_impl(ctx, *r);
  return std::visit(
      overloaded{
          [&](const Term::Var& n) -> FormulaPtr {
            if (auto f = ctx.lookup_hypothesis(n.name)) return *f;
            fail(TypeError::Kind::UnboundVariable,
                 "unbound proof variable '" + n.name + "'", e);
          },
          [&](const Term::App& n) -> FormulaPtr {
            FormulaPtr f = infer_impl(ctx, n.fn);
            auto* i = std::get_if<Formula::Imp>(&f->node);
            if (!i)
              fail(TypeError::Kind::ShapeMismatch,
                   "application of non-implication " + print_formula(f), e,
                   nullptr, f);
            check_impl(ctx, n.arg, i->hyp);
            return i->concl;
          },
          [&](const Term::Proj& n) -> FormulaPtr {
            FormulaPtr f = infer_impl(ctx, n.arg);
            auto* c = std::get_if<Formula::And>(&f->node);
            if (!c)
              fail(TypeError::Kind::ShapeMismatch,
                   "projection from non-conjunction " + print_formula(f), e,
                   nullptr, f);
            return n.index == 1 ? c->left : c->right;
          },
          [&](const Term::Case& n) -> FormulaPtr {
            FormulaPtr s = infer_impl(ctx, n.scrutinee);
            auto* o = std::get_if<Formula::Or>(&s->node);
            if (!o)
              fail(TypeError::Kind::ShapeMismatch,
                   "case on non-disjunction " + print_formula(s), e, nullptr, s);
            auto [lv, lb] = fresh_proof_binder(ctx, n.left_var, n.left_body);
            Context lctx = ctx.with_hypothesis(lv, o->left);
            if (!is_neutral(lb))
              fail(TypeError::Kind::NotInferable,
                   "cannot infer case result: first branch is not neutral", e);
            FormulaPtr c = infer_impl(lctx, lb);
            auto [rv, rb] = fresh_proof_binder(ctx, n.right_var, n.right_body);
            check_impl(ctx.with_hypothesis(rv, o->right), rb, c);
            return c;
          },
          [&](const Term::IApp& n) -> FormulaPtr {
            FormulaPtr f = infer_impl(ctx, n.fn);
            auto* fa = std::get_if<Formula::Forall>(&f->node);
            if (!fa)
              fail(TypeError::Kind::ShapeMismatch,
                   "individual application to non-universal " + print_formula(f),
                   e, nullptr, f);
            scope_check_individual(ctx, n.arg, e);
            return subst_ind_formula(fa->body, fa->var, n.arg);
          },
          [&](const Term::Dest& n) -> FormulaPtr {
            FormulaPtr s = infer_impl(ctx, n.scrutinee);
            auto* ex = std::get_if<Formula::Exists>(&s->node);
            if (!ex)
              fail(TypeError::Kind::ShapeMismatch,
                   "dest on non-existential " + print_formula(s), e, nullptr, s);
            auto [x, body1] = fresh_ind_binder(ctx, n.ind_var, n.body);
            Context xctx = ctx.with_ind_var(x);
            FormulaPtr hyp_f = subst_ind_formula(ex->body, ex->var, ivar(x));
            auto [a, body2] = fresh_proof_binder(xctx, n.proof_var, body1);
            Context bctx = xctx.with_hypothesis(a, hyp_f);
            if (!is_neutral(body2))
              fail(TypeError::Kind::NotInferable,
                   "cannot infer dest result: body is not neutral", e);
            FormulaPtr c = infer_impl(bctx, body2);
            if (free_ind_vars(c).count(x))
              fail(TypeError::Kind::ScopeError,
                   "existential variable '" + x + "' escapes in " +
                       print_formula(c),
                   e, nullptr, c);
            return c;
          },
          [&](const auto&) -> FormulaPtr {
            fail(TypeError::Kind::NotInferable,
                 "introduction form needs a goal formula: " + print_term(e), e);
          },
      },
      e->node);
}

void check_impl(const Context& ctx, const TermPtr& p, const FormulaPtr& goal) {
  if (auto r = whstep(ctx, p)) {
    check_impl(ctx, *r, goal);
    return;
  }
  std::visit(
      overloaded{
          [&](const Term::Lam& n) {
            auto* i = std::get_if<Formula::Imp>(&goal->node);
            if (!i)
              fail(TypeError::Kind::ShapeMismatch,
                   "fun against non-implication " + print_formula(goal), p,
                   goal);
            auto [v, body] = fresh_proof_binder(ctx, n.var, n.body);
            check_impl(ctx.with_hypothesis(v, i->hyp), body, i->concl);
          },
          [&](const Term::Pair& n) {
            auto* c = std::get_if<Formula::And>(&goal->node);
            if (!c)
              fail(TypeError::Kind::ShapeMismatch,
                   "pair against non-conjunction " + print_formula(goal), p,
                   goal);
            check_impl(ctx, n.first, c->left);
            check_impl(ctx, n.second, c->right);
          },
          [&](const Term::Inj& n) {
            auto* o = std::get_if<Formula::Or>(&goal->node);
            if (!o)
              fail(TypeError::Kind::ShapeMismatch,
                   "injection against non-disjunction " + print_formula(goal),
                   p, goal);
            check_impl(ctx, n.arg, n.index == 1 ? o->left : o->right);
          },
          [&](const Term::Gen& n) {
            auto* fa = std::get_if<Formula::Forall>(&goal->node);
            if (!fa)
              fail(TypeError::Kind::ShapeMismatch,
                   "gen against non-universal " + print_formula(goal), p, goal);
            auto [x, body] = fresh_ind_binder(ctx, n.var, n.body);
            check_impl(ctx.with_ind_var(x), body,
                       subst_ind_formula(fa->body, fa->var, ivar(x)));
          },
          [&](const Term::Wit& n) {
            auto* ex = std::get_if<Formula::Exists>(&goal->node);
            if (!ex)
              fail(TypeError::Kind::ShapeMismatch,
                   "witness pair against non-existential " +
                       print_formula(goal),
                   p, goal);
            scope_check_individual(ctx, n.witness, p);
            check_impl(ctx, n.body,
                       subst_ind_formula(ex->body, ex->var, n.witness));
          },
          [&](const Term::Case& n) {
            FormulaPtr s = infer_impl(ctx, n.scrutinee);
            auto* o = std::get_if<Formula::Or>(&s->node);
            if (!o)
              fail(TypeError::Kind::ShapeMismatch,
                   "case on non-disjunction " + print_formula(s), p, nullptr,
                   s);
            auto [lv, lb] = fresh_proof_binder(ctx, n.left_var, n.left_body);
            check_impl(ctx.with_hypothesis(lv, o->left), lb, goal);
            auto [rv, rb] = fresh_proof_binder(ctx, n.right_var, n.right_body);
            check_impl(ctx.with_hypothesis(rv, o->right), rb, goal);
          },
          [&](const Term::Dest& n) {
            FormulaPtr s = infer_impl(ctx, n.scrutinee);
            auto* ex = std::get_if<Formula::Exists>(&s->node);
            if (!ex)
              fail(TypeError::Kind::ShapeMismatch,
                   "dest on non-existential " + print_formula(s), p, nullptr,
                   s);
            auto [x, body1] = fresh_ind_binder(ctx, n.ind_var, n.body);
            if (free_ind_vars(goal).count(x))
              fail(TypeError::Kind::ScopeError,
                   "dest variable '" + x + "' occurs in result formula", p,
                   goal);
            Context xctx = ctx.with_ind_var(x);
            FormulaPtr hyp_f = subst_ind_formula(ex->body, ex->var, ivar(x));
            auto [a, body2] = fresh_proof_binder(xctx, n.proof_var, body1);
            check_impl(xctx.with_hypothesis(a, hyp_f), body2, goal);
          },
          [&](const Term::App& n) {
            FormulaPtr fty;
            try {
              fty = infer_impl(ctx, n.fn);
            } catch (const TypeError& err) {
              // A head such as a case of lambdas has no inferable formula;
              // with the goal in hand the argument can be inferred instead.
              if (err.kind != TypeError::Kind::NotInferable) throw;
              FormulaPtr arg_ty = infer_impl(ctx, n.arg);
              check_impl(ctx, n.fn, imp(arg_ty, goal));
              return;
            }
            auto* i = std::get_if<Formula::Imp>(&fty->node);
            if (!i)
              fail(TypeError::Kind::ShapeMismatch,
                   "application of non-implication " + print_formula(fty), p,
                   nullptr, fty);
            check_impl(ctx, n.arg, i->hyp);
            check_same(i->concl, goal, p);
          },
          [&](const auto&) { check_same(infer_impl(ctx, p), goal, p); },
      },
      p->node);
}

bool formula_scoped(const Context& ctx, const FormulaPtr& f,
                    std::set<std::string>& bound) {
  return std::visit(
      overloaded{
          [&](const Formula::Atom& a) {
            for (const auto& t : a.args) {
              if (t.kind == Individual::Kind::Constant) {
                if (!ctx.constants.count(t.name)) return false;
              } else if (!bound.count(t.name) && !ctx.ind_vars.count(t.name)) {
                return false;
              }
            }
            return true;
          },
          [&](const Formula::And& n) {
            return formula_scoped(ctx, n.left, bound) &&
                   formula_scoped(ctx, n.right, bound);
          },
          [&](const Formula::Or& n) {
            return formula_scoped(ctx, n.left, bound) &&
                   formula_scoped(ctx, n.right, bound);
          },
          [&](const Formula::Imp& n) {
            return formula_scoped(ctx, n.hyp, bound) &&
                   formula_scoped(ctx, n.concl, bound);
          },
          [&](const Formula::Forall& n) {
            bool fresh = bound.insert(n.var).second;
            bool ok = formula_scoped(ctx, n.body, bound);
            if (fresh) bound.erase(n.var);
            return ok;
          },
          [&](const Formula::Exists& n) {
            bool fresh = bound.insert(n.var).second;
            bool ok = formula_scoped(ctx, n.body, bound);
            if (fresh) bound.erase(n.var);
            return ok;
          },
      },
      f->node);
}

}  // namespace

bool well_scoped(const Context& ctx, const FormulaPtr& f) {
  std::set<std::string> bound;
  return formula_scoped(ctx, f, bound);
}

FormulaPtr infer(const Context& ctx, const TermPtr& e) {
  return infer_impl(ctx, e);
}

FormulaPtr infer_neutral(const Context& ctx, const TermPtr& e) {
  if (!is_neutral(e))
    fail(TypeError::Kind::NotInferable,
         "term is not in the neutral grammar: " + print_term(e), e);
  return infer_impl(ctx, e);
}

void check(const Context& ctx, const TermPtr& p, const FormulaPtr& goal) {
  if (!well_scoped(ctx, goal))
    fail(TypeError::Kind::ScopeError,
         "goal formula not well-scoped: " + print_formula(goal), p, goal);
  check_impl(ctx, p, goal);
}

bool checks(const Context& ctx, const TermPtr& p, const FormulaPtr& goal) {
  try {
    check(ctx, p, goal);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

bool is_neutral(const TermPtr& p) {
  return std::visit(
      overloaded{
          [&](const Term::Var&) { return true; },
          [&](const Term::App& n) {
            return is_neutral(n.fn) && is_normal(n.arg);
          },
          [&](const Term::Case& n) {
            return is_neutral(n.scrutinee) && is_normal(n.left_body) &&
                   is_normal(n.right_body);
          },
          [&](const Term::Proj& n) { return is_neutral(n.arg); },
          [&](const Term::IApp& n) { return is_neutral(n.fn); },
          [&](const Term::Dest& n) {
            return is_neutral(n.scrutinee) && is_normal(n.body);
          },
          [&](const auto&) { return false; },
      },
      p->node);
}

bool is_normal(const TermPtr& p) {
  return std::visit(
      overloaded{
          [&](const Term::Lam& n) { return is_normal(n.body); },
          [&](const Term::Inj& n) { return is_normal(n.arg); },
          [&](const Term::Pair& n) {
            return is_normal(n.first) && is_normal(n.second);
          },
          [&](const Term::Gen& n) { return is_normal(n.body); },
          [&](const Term::Wit& n) { return is_normal(n.body); },
          [&](const auto&) { return is_neutral(p); },
      },
      p->node);
}

}  // namespace mqc
