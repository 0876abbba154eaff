#include "mqc/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqc {

Individual ivar(std::string name) {
  return Individual{Individual::Kind::Variable, std::move(name)};
}

Individual iconst(std::string name) {
  return Individual{Individual::Kind::Constant, std::move(name)};
}

// ---------------------------------------------------------------------------
// Formula constructors

static FormulaPtr mk(Formula::Node node) {
  return std::make_shared<const Formula>(Formula{std::move(node)});
}

FormulaPtr atom(std::string name, std::vector<Individual> args) {
  return mk(Formula::Atom{std::move(name), std::move(args)});
}
FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return mk(Formula::And{std::move(l), std::move(r)});
}
FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return mk(Formula::Or{std::move(l), std::move(r)});
}
FormulaPtr imp(FormulaPtr h, FormulaPtr c) {
  return mk(Formula::Imp{std::move(h), std::move(c)});
}
FormulaPtr forall(std::string v, FormulaPtr body) {
  return mk(Formula::Forall{std::move(v), std::move(body)});
}
FormulaPtr exists(std::string v, FormulaPtr body) {
  return mk(Formula::Exists{std::move(v), std::move(body)});
}

bool is_atomic(const FormulaPtr& f) {
  return std::holds_alternative<Formula::Atom>(f->node);
}

// ---------------------------------------------------------------------------
// Formula operations

static void collect_free_ind(const FormulaPtr& f, std::set<std::string>& bound,
                             std::set<std::string>& out) {
  std::visit(
      overloaded{
          [&](const Formula::Atom& a) {
            for (const auto& t : a.args)
              if (t.kind == Individual::Kind::Variable && !bound.count(t.name))
                out.insert(t.name);
          },
          [&](const Formula::And& n) {
            collect_free_ind(n.left, bound, out);
            collect_free_ind(n.right, bound, out);
          },
          [&](const Formula::Or& n) {
            collect_free_ind(n.left, bound, out);
            collect_free_ind(n.right, bound, out);
          },
          [&](const Formula::Imp& n) {
            collect_free_ind(n.hyp, bound, out);
            collect_free_ind(n.concl, bound, out);
          },
          [&](const Formula::Forall& n) {
            bool fresh = bound.insert(n.var).second;
            collect_free_ind(n.body, bound, out);
            if (fresh) bound.erase(n.var);
          },
          [&](const Formula::Exists& n) {
            bool fresh = bound.insert(n.var).second;
            collect_free_ind(n.body, bound, out);
            if (fresh) bound.erase(n.var);
          },
      },
      f->node);
}

std::set<std::string> free_ind_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free_ind(f, bound, out);
  return out;
}

static Individual subst_individual(const Individual& u, const std::string& x,
                                   const Individual& t) {
  if (u.kind == Individual::Kind::Variable && u.name == x) return t;
  return u;
}

std::string avoid_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int k = 0;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

template <class Quant>
static FormulaPtr subst_under_formula_binder(const Quant& q,
                                             const std::string& x,
                                             const Individual& t,
                                             FormulaPtr (*rebuild)(std::string,
                                                                   FormulaPtr)) {
  if (q.var == x) return rebuild(q.var, q.body);  // bound occurrence
  if (t.kind == Individual::Kind::Variable && t.name == q.var) {
    // Renaming needed to avoid capturing t.
    std::set<std::string> avoid = free_ind_vars(q.body);
    avoid.insert(x);
    avoid.insert(t.name);
    std::string fresh = avoid_name(q.var, avoid);
    FormulaPtr renamed = subst_ind_formula(q.body, q.var, ivar(fresh));
    return rebuild(fresh, subst_ind_formula(renamed, x, t));
  }
  return rebuild(q.var, subst_ind_formula(q.body, x, t));
}

FormulaPtr subst_ind_formula(const FormulaPtr& f, const std::string& x,
                             const Individual& t) {
  return std::visit(
      overloaded{
          [&](const Formula::Atom& a) {
            std::vector<Individual> args;
            args.reserve(a.args.size());
            for (const auto& u : a.args) args.push_back(subst_individual(u, x, t));
            return atom(a.name, std::move(args));
          },
          [&](const Formula::And& n) {
            return conj(subst_ind_formula(n.left, x, t),
                        subst_ind_formula(n.right, x, t));
          },
          [&](const Formula::Or& n) {
            return disj(subst_ind_formula(n.left, x, t),
                        subst_ind_formula(n.right, x, t));
          },
          [&](const Formula::Imp& n) {
            return imp(subst_ind_formula(n.hyp, x, t),
                       subst_ind_formula(n.concl, x, t));
          },
          [&](const Formula::Forall& n) {
            return subst_under_formula_binder(n, x, t, &forall);
          },
          [&](const Formula::Exists& n) {
            return subst_under_formula_binder(n, x, t, &exists);
          },
      },
      f->node);
}

namespace {

// Innermost-first correspondence between bound names on the two sides.
struct RenamingStack {
  std::vector<std::pair<std::string, std::string>> entries;

  bool matches(const std::string& l, const std::string& r) const {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      if (it->first == l || it->second == r)
        return it->first == l && it->second == r;
    }
    return l == r;  // both free
  }
};

bool ind_matches(const RenamingStack& ienv, const Individual& a,
                 const Individual& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Individual::Kind::Constant) return a.name == b.name;
  return ienv.matches(a.name, b.name);
}

bool aeq_formula(const FormulaPtr& a, const FormulaPtr& b, RenamingStack& ienv) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Formula::Atom& x) {
            const auto& y = std::get<Formula::Atom>(b->node);
            if (x.name != y.name || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
              if (!ind_matches(ienv, x.args[i], y.args[i])) return false;
            return true;
          },
          [&](const Formula::And& x) {
            const auto& y = std::get<Formula::And>(b->node);
            return aeq_formula(x.left, y.left, ienv) &&
                   aeq_formula(x.right, y.right, ienv);
          },
          [&](const Formula::Or& x) {
            const auto& y = std::get<Formula::Or>(b->node);
            return aeq_formula(x.left, y.left, ienv) &&
                   aeq_formula(x.right, y.right, ienv);
          },
          [&](const Formula::Imp& x) {
            const auto& y = std::get<Formula::Imp>(b->node);
            return aeq_formula(x.hyp, y.hyp, ienv) &&
                   aeq_formula(x.concl, y.concl, ienv);
          },
          [&](const Formula::Forall& x) {
            const auto& y = std::get<Formula::Forall>(b->node);
            ienv.entries.emplace_back(x.var, y.var);
            bool ok = aeq_formula(x.body, y.body, ienv);
            ienv.entries.pop_back();
            return ok;
          },
          [&](const Formula::Exists& x) {
            const auto& y = std::get<Formula::Exists>(b->node);
            ienv.entries.emplace_back(x.var, y.var);
            bool ok = aeq_formula(x.body, y.body, ienv);
            ienv.entries.pop_back();
            return ok;
          },
      },
      a->node);
}

}  // namespace

bool alpha_eq_formula(const FormulaPtr& a, const FormulaPtr& b) {
  RenamingStack ienv;
  return aeq_formula(a, b, ienv);
}

// ---------------------------------------------------------------------------
// Term constructors

static TermPtr mk(Term::Node node) {
  return std::make_shared<const Term>(Term{std::move(node)});
}

TermPtr var(std::string name) { return mk(Term::Var{std::move(name)}); }
TermPtr lam(std::string v, TermPtr body) {
  return mk(Term::Lam{std::move(v), std::move(body)});
}
TermPtr app(TermPtr fn, TermPtr arg) {
  return mk(Term::App{std::move(fn), std::move(arg)});
}
TermPtr pair(TermPtr first, TermPtr second) {
  return mk(Term::Pair{std::move(first), std::move(second)});
}
TermPtr proj(int index, TermPtr arg) {
  return mk(Term::Proj{index, std::move(arg)});
}
TermPtr inj(int index, TermPtr arg) {
  return mk(Term::Inj{index, std::move(arg)});
}
TermPtr kase(TermPtr s, std::string lv, TermPtr lb, std::string rv, TermPtr rb) {
  return mk(Term::Case{std::move(s), std::move(lv), std::move(lb),
                       std::move(rv), std::move(rb)});
}
TermPtr gen(std::string v, TermPtr body) {
  return mk(Term::Gen{std::move(v), std::move(body)});
}
TermPtr iapp(TermPtr fn, Individual arg) {
  return mk(Term::IApp{std::move(fn), std::move(arg)});
}
TermPtr wit(Individual witness, TermPtr body) {
  return mk(Term::Wit{std::move(witness), std::move(body)});
}
TermPtr dest(TermPtr s, std::string iv, std::string pv, TermPtr body) {
  return mk(Term::Dest{std::move(s), std::move(iv), std::move(pv),
                       std::move(body)});
}

// ---------------------------------------------------------------------------
// Term traversals

static void collect_term(const TermPtr& p, std::set<std::string>& pbound,
                         std::set<std::string>& ibound,
                         std::set<std::string>& pfree,
                         std::set<std::string>& ifree) {
  auto see_ind = [&](const Individual& t) {
    if (t.kind == Individual::Kind::Variable && !ibound.count(t.name))
      ifree.insert(t.name);
  };
  auto under_proof = [&](const std::string& v, const TermPtr& body) {
    bool fresh = pbound.insert(v).second;
    collect_term(body, pbound, ibound, pfree, ifree);
    if (fresh) pbound.erase(v);
  };
  std::visit(
      overloaded{
          [&](const Term::Var& n) {
            if (!pbound.count(n.name)) pfree.insert(n.name);
          },
          [&](const Term::Lam& n) { under_proof(n.var, n.body); },
          [&](const Term::App& n) {
            collect_term(n.fn, pbound, ibound, pfree, ifree);
            collect_term(n.arg, pbound, ibound, pfree, ifree);
          },
          [&](const Term::Pair& n) {
            collect_term(n.first, pbound, ibound, pfree, ifree);
            collect_term(n.second, pbound, ibound, pfree, ifree);
          },
          [&](const Term::Proj& n) {
            collect_term(n.arg, pbound, ibound, pfree, ifree);
          },
          [&](const Term::Inj& n) {
            collect_term(n.arg, pbound, ibound, pfree, ifree);
          },
          [&](const Term::Case& n) {
            collect_term(n.scrutinee, pbound, ibound, pfree, ifree);
            under_proof(n.left_var, n.left_body);
            under_proof(n.right_var, n.right_body);
          },
          [&](const Term::Gen& n) {
            bool fresh = ibound.insert(n.var).second;
            collect_term(n.body, pbound, ibound, pfree, ifree);
            if (fresh) ibound.erase(n.var);
          },
          [&](const Term::IApp& n) {
            collect_term(n.fn, pbound, ibound, pfree, ifree);
            see_ind(n.arg);
          },
          [&](const Term::Wit& n) {
            see_ind(n.witness);
            collect_term(n.body, pbound, ibound, pfree, ifree);
          },
          [&](const Term::Dest& n) {
            collect_term(n.scrutinee, pbound, ibound, pfree, ifree);
            bool ifresh = ibound.insert(n.ind_var).second;
            bool pfresh = pbound.insert(n.proof_var).second;
            collect_term(n.body, pbound, ibound, pfree, ifree);
            if (pfresh) pbound.erase(n.proof_var);
            if (ifresh) ibound.erase(n.ind_var);
          },
      },
      p->node);
}

std::set<std::string> free_proof_vars(const TermPtr& p) {
  std::set<std::string> pb, ib, pf, iff;
  collect_term(p, pb, ib, pf, iff);
  return pf;
}

std::set<std::string> free_ind_vars(const TermPtr& p) {
  std::set<std::string> pb, ib, pf, iff;
  collect_term(p, pb, ib, pf, iff);
  return iff;
}

std::size_t node_count(const TermPtr& p) {
  std::size_t n = 1;
  std::visit(overloaded{
                 [&](const Term::Var&) {},
                 [&](const Term::Lam& x) { n += node_count(x.body); },
                 [&](const Term::App& x) {
                   n += node_count(x.fn) + node_count(x.arg);
                 },
                 [&](const Term::Pair& x) {
                   n += node_count(x.first) + node_count(x.second);
                 },
                 [&](const Term::Proj& x) { n += node_count(x.arg); },
                 [&](const Term::Inj& x) { n += node_count(x.arg); },
                 [&](const Term::Case& x) {
                   n += node_count(x.scrutinee) + node_count(x.left_body) +
                        node_count(x.right_body);
                 },
                 [&](const Term::Gen& x) { n += node_count(x.body); },
                 [&](const Term::IApp& x) { n += node_count(x.fn); },
                 [&](const Term::Wit& x) { n += node_count(x.body); },
                 [&](const Term::Dest& x) {
                   n += node_count(x.scrutinee) + node_count(x.body);
                 },
             },
             p->node);
  return n;
}

// ---------------------------------------------------------------------------
// Substitution on terms

namespace {

// Renames proof binder v to something avoiding q's free variables, if needed.
struct ProofBinder {
  std::string var;
  TermPtr body;
};

ProofBinder freshen_proof_binder(const std::string& v, const TermPtr& body,
                                 const std::set<std::string>& qfree,
                                 const std::string& target) {
  if (!qfree.count(v)) return {v, body};
  std::set<std::string> avoid = qfree;
  auto bodyfree = free_proof_vars(body);
  avoid.insert(bodyfree.begin(), bodyfree.end());
  avoid.insert(target);
  std::string fresh = avoid_name(v, avoid);
  return {fresh, subst_proof(body, v, var(fresh))};
}

struct IndBinder {
  std::string var;
  TermPtr body;
};

IndBinder freshen_ind_binder(const std::string& v, const TermPtr& body,
                             const std::set<std::string>& avoid_extra) {
  if (!avoid_extra.count(v)) return {v, body};
  std::set<std::string> avoid = avoid_extra;
  auto bodyfree = free_ind_vars(body);
  avoid.insert(bodyfree.begin(), bodyfree.end());
  std::string fresh = avoid_name(v, avoid);
  return {fresh, subst_ind_term(body, v, ivar(fresh))};
}

}  // namespace

TermPtr subst_proof(const TermPtr& p, const std::string& a, const TermPtr& q) {
  auto qfree = free_proof_vars(q);
  auto qifree = free_ind_vars(q);
  return std::visit(
      overloaded{
          [&](const Term::Var& n) { return n.name == a ? q : p; },
          [&](const Term::Lam& n) {
            if (n.var == a) return p;  // shadowed
            auto [v, body] = freshen_proof_binder(n.var, n.body, qfree, a);
            return lam(v, subst_proof(body, a, q));
          },
          [&](const Term::App& n) {
            return app(subst_proof(n.fn, a, q), subst_proof(n.arg, a, q));
          },
          [&](const Term::Pair& n) {
            return pair(subst_proof(n.first, a, q), subst_proof(n.second, a, q));
          },
          [&](const Term::Proj& n) {
            return proj(n.index, subst_proof(n.arg, a, q));
          },
          [&](const Term::Inj& n) {
            return inj(n.index, subst_proof(n.arg, a, q));
          },
          [&](const Term::Case& n) {
            TermPtr s = subst_proof(n.scrutinee, a, q);
            auto do_branch = [&](const std::string& v, const TermPtr& body)
                -> std::pair<std::string, TermPtr> {
              if (v == a) return {v, body};
              auto [v2, body2] = freshen_proof_binder(v, body, qfree, a);
              return {v2, subst_proof(body2, a, q)};
            };
            auto [lv, lb] = do_branch(n.left_var, n.left_body);
            auto [rv, rb] = do_branch(n.right_var, n.right_body);
            return kase(s, lv, lb, rv, rb);
          },
          [&](const Term::Gen& n) {
            auto [v, body] = freshen_ind_binder(n.var, n.body, qifree);
            return gen(v, subst_proof(body, a, q));
          },
          [&](const Term::IApp& n) {
            return iapp(subst_proof(n.fn, a, q), n.arg);
          },
          [&](const Term::Wit& n) {
            return wit(n.witness, subst_proof(n.body, a, q));
          },
          [&](const Term::Dest& n) {
            TermPtr s = subst_proof(n.scrutinee, a, q);
            auto [iv, body1] = freshen_ind_binder(n.ind_var, n.body, qifree);
            if (n.proof_var == a) return dest(s, iv, n.proof_var, body1);
            auto [pv, body2] = freshen_proof_binder(n.proof_var, body1, qfree, a);
            return dest(s, iv, pv, subst_proof(body2, a, q));
          },
      },
      p->node);
}

TermPtr subst_ind_term(const TermPtr& p, const std::string& x,
                       const Individual& t) {
  std::set<std::string> tfree;
  if (t.kind == Individual::Kind::Variable) tfree.insert(t.name);
  return std::visit(
      overloaded{
          [&](const Term::Var&) { return p; },
          [&](const Term::Lam& n) {
            return lam(n.var, subst_ind_term(n.body, x, t));
          },
          [&](const Term::App& n) {
            return app(subst_ind_term(n.fn, x, t), subst_ind_term(n.arg, x, t));
          },
          [&](const Term::Pair& n) {
            return pair(subst_ind_term(n.first, x, t),
                        subst_ind_term(n.second, x, t));
          },
          [&](const Term::Proj& n) {
            return proj(n.index, subst_ind_term(n.arg, x, t));
          },
          [&](const Term::Inj& n) {
            return inj(n.index, subst_ind_term(n.arg, x, t));
          },
          [&](const Term::Case& n) {
            return kase(subst_ind_term(n.scrutinee, x, t), n.left_var,
                        subst_ind_term(n.left_body, x, t), n.right_var,
                        subst_ind_term(n.right_body, x, t));
          },
          [&](const Term::Gen& n) {
            if (n.var == x) return p;
            auto [v, body] = freshen_ind_binder(n.var, n.body, tfree);
            return gen(v, subst_ind_term(body, x, t));
          },
          [&](const Term::IApp& n) {
            return iapp(subst_ind_term(n.fn, x, t),
                        subst_individual(n.arg, x, t));
          },
          [&](const Term::Wit& n) {
            return wit(subst_individual(n.witness, x, t),
                       subst_ind_term(n.body, x, t));
          },
          [&](const Term::Dest& n) {
            TermPtr s = subst_ind_term(n.scrutinee, x, t);
            if (n.ind_var == x) return dest(s, n.ind_var, n.proof_var, n.body);
            auto [v, body] = freshen_ind_binder(n.ind_var, n.body, tfree);
            return dest(s, v, n.proof_var, subst_ind_term(body, x, t));
          },
      },
      p->node);
}

// ---------------------------------------------------------------------------
// Alpha equality on terms

namespace {

bool aeq_term(const TermPtr& a, const TermPtr& b, RenamingStack& penv,
              RenamingStack& ienv) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Term::Var& x) {
            return penv.matches(x.name, std::get<Term::Var>(b->node).name);
          },
          [&](const Term::Lam& x) {
            const auto& y = std::get<Term::Lam>(b->node);
            penv.entries.emplace_back(x.var, y.var);
            bool ok = aeq_term(x.body, y.body, penv, ienv);
            penv.entries.pop_back();
            return ok;
          },
          [&](const Term::App& x) {
            const auto& y = std::get<Term::App>(b->node);
            return aeq_term(x.fn, y.fn, penv, ienv) &&
                   aeq_term(x.arg, y.arg, penv, ienv);
          },
          [&](const Term::Pair& x) {
            const auto& y = std::get<Term::Pair>(b->node);
            return aeq_term(x.first, y.first, penv, ienv) &&
                   aeq_term(x.second, y.second, penv, ienv);
          },
          [&](const Term::Proj& x) {
            const auto& y = std::get<Term::Proj>(b->node);
            return x.index == y.index && aeq_term(x.arg, y.arg, penv, ienv);
          },
          [&](const Term::Inj& x) {
            const auto& y = std::get<Term::Inj>(b->node);
            return x.index == y.index && aeq_term(x.arg, y.arg, penv, ienv);
          },
          [&](const Term::Case& x) {
            const auto& y = std::get<Term::Case>(b->node);
            if (!aeq_term(x.scrutinee, y.scrutinee, penv, ienv)) return false;
            penv.entries.emplace_back(x.left_var, y.left_var);
            bool okl = aeq_term(x.left_body, y.left_body, penv, ienv);
            penv.entries.pop_back();
            if (!okl) return false;
            penv.entries.emplace_back(x.right_var, y.right_var);
            bool okr = aeq_term(x.right_body, y.right_body, penv, ienv);
            penv.entries.pop_back();
            return okr;
          },
          [&](const Term::Gen& x) {
            const auto& y = std::get<Term::Gen>(b->node);
            ienv.entries.emplace_back(x.var, y.var);
            bool ok = aeq_term(x.body, y.body, penv, ienv);
            ienv.entries.pop_back();
            return ok;
          },
          [&](const Term::IApp& x) {
            const auto& y = std::get<Term::IApp>(b->node);
            return aeq_term(x.fn, y.fn, penv, ienv) &&
                   ind_matches(ienv, x.arg, y.arg);
          },
          [&](const Term::Wit& x) {
            const auto& y = std::get<Term::Wit>(b->node);
            return ind_matches(ienv, x.witness, y.witness) &&
                   aeq_term(x.body, y.body, penv, ienv);
          },
          [&](const Term::Dest& x) {
            const auto& y = std::get<Term::Dest>(b->node);
            if (!aeq_term(x.scrutinee, y.scrutinee, penv, ienv)) return false;
            ienv.entries.emplace_back(x.ind_var, y.ind_var);
            penv.entries.emplace_back(x.proof_var, y.proof_var);
            bool ok = aeq_term(x.body, y.body, penv, ienv);
            penv.entries.pop_back();
            ienv.entries.pop_back();
            return ok;
          },
      },
      a->node);
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  RenamingStack penv, ienv;
  return aeq_term(a, b, penv, ienv);
}

// ---------------------------------------------------------------------------
// Context

std::optional<FormulaPtr> Context::lookup_hypothesis(
    const std::string& name) const {
  for (const auto& [n, f] : hypotheses)
    if (n == name) return f;
  return std::nullopt;
}

bool Context::has_hypothesis(const std::string& name) const {
  return lookup_hypothesis(name).has_value();
}

bool Context::has_individual(const Individual& t) const {
  if (t.kind == Individual::Kind::Constant) return constants.count(t.name) > 0;
  return ind_vars.count(t.name) > 0;
}

Context Context::with_hypothesis(std::string name, FormulaPtr formula) const {
  Context out = *this;
  out.hypotheses.emplace_back(std::move(name), std::move(formula));
  return out;
}

Context Context::with_ind_var(std::string name) const {
  Context out = *this;
  out.ind_vars.insert(std::move(name));
  return out;
}

Context Context::with_constant(std::string name) const {
  Context out = *this;
  out.constants.insert(std::move(name));
  return out;
}

bool Context::extends(const Context& base) const {
  if (base.hypotheses.size() > hypotheses.size()) return false;
  for (std::size_t i = 0; i < base.hypotheses.size(); ++i) {
    if (hypotheses[i].first != base.hypotheses[i].first) return false;
    if (!alpha_eq_formula(hypotheses[i].second, base.hypotheses[i].second))
      return false;
  }
  return std::includes(ind_vars.begin(), ind_vars.end(), base.ind_vars.begin(),
                       base.ind_vars.end()) &&
         std::includes(constants.begin(), constants.end(),
                       base.constants.begin(), base.constants.end());
}

std::vector<Individual> Context::individuals() const {
  std::vector<Individual> out;
  for (const auto& c : constants) out.push_back(iconst(c));
  for (const auto& v : ind_vars) out.push_back(ivar(v));
  return out;
}

std::set<std::string> Context::all_names() const {
  std::set<std::string> out;
  for (const auto& [n, f] : hypotheses) {
    out.insert(n);
    auto fv = free_ind_vars(f);
    out.insert(fv.begin(), fv.end());
  }
  out.insert(ind_vars.begin(), ind_vars.end());
  out.insert(constants.begin(), constants.end());
  return out;
}

// ---------------------------------------------------------------------------
// NameSupply

NameSupply::NameSupply(const Context& ctx) : reserved_(ctx.all_names()) {}

void NameSupply::reserve(const std::string& name) { reserved_.insert(name); }

std::string NameSupply::fresh(const char* prefix) {
  for (;;) {
    std::string name = prefix + std::to_string(counter_++);
    if (!reserved_.count(name)) return name;
  }
}

std::string NameSupply::fresh_proof_var() { return fresh("a"); }
std::string NameSupply::fresh_ind_var() { return fresh("x"); }

}  // namespace mqc
