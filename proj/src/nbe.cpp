#include "mqc/nbe.hpp"

#include "mqc/print.hpp"
#include "mqc/typecheck.hpp"

namespace mqc {

const ForcingValue& Env::proof(const std::string& name) const {
  auto it = proofs.find(name);
  if (it == proofs.end()) throw UnboundInEnv(name);
  return it->second;
}

Individual Env::resolve(const Individual& t) const {
  if (t.kind == Individual::Kind::Variable) {
    auto it = individuals.find(t.name);
    if (it != individuals.end()) return it->second;
  }
  return t;
}

Env Env::with_proof(const std::string& name, ForcingValue v) const {
  Env out = *this;
  out.proofs.insert_or_assign(name, std::move(v));
  return out;
}

Env Env::with_individual(const std::string& name, Individual t) const {
  Env out = *this;
  out.individuals.insert_or_assign(name, std::move(t));
  return out;
}

namespace {

ForcingValue eval_impl(const TermPtr& p, const Env& env, Strategy strat) {
  return std::visit(
      overloaded{
          [&](const Term::Var& n) { return env.proof(n.name); },
          [&](const Term::Lam& n) {
            TermPtr body = n.body;
            std::string v = n.var;
            return unit(strong(StrongValue::Fun{
                [body, v, env, strat](const Context&, const ForcingValue& arg) {
                  return eval_impl(body, env.with_proof(v, arg), strat);
                }}));
          },
          [&](const Term::App& n) {
            ForcingValue fn_v = eval_impl(n.fn, env, strat);
            ForcingValue arg_v = eval_impl(n.arg, env, strat);
            if (strat == Strategy::CallByValue) {
              // The argument is forced to a strong value before the
              // function is entered.
              return ForcingValue([fn_v, arg_v](const Context& w,
                                                const Continuation& k) {
                return fn_v(w, [arg_v, k](const Context& w2,
                                          const StrongPtr& fv) {
                  return arg_v(w2, [fv, k](const Context& w3,
                                           const StrongPtr& av) {
                    return std::get<StrongValue::Fun>(fv->node).apply(
                        w3, unit(av))(w3, k);
                  });
                });
              });
            }
            return ForcingValue(
                [fn_v, arg_v](const Context& w, const Continuation& k) {
                  return fn_v(w, [arg_v, k](const Context& w2,
                                            const StrongPtr& fv) {
                    return std::get<StrongValue::Fun>(fv->node).apply(
                        w2, arg_v)(w2, k);
                  });
                });
          },
          [&](const Term::Pair& n) {
            return unit(strong(StrongValue::Pair{
                eval_impl(n.first, env, strat), eval_impl(n.second, env, strat)}));
          },
          [&](const Term::Proj& n) {
            ForcingValue v = eval_impl(n.arg, env, strat);
            int index = n.index;
            return ForcingValue([v, index](const Context& w,
                                           const Continuation& k) {
              return v(w, [index, k](const Context& w2, const StrongPtr& sv) {
                const auto& pr = std::get<StrongValue::Pair>(sv->node);
                return (index == 1 ? pr.left : pr.right)(w2, k);
              });
            });
          },
          [&](const Term::Inj& n) {
            ForcingValue v = eval_impl(n.arg, env, strat);
            return n.index == 1 ? unit(strong(StrongValue::Left{v}))
                                : unit(strong(StrongValue::Right{v}));
          },
          [&](const Term::Case& n) {
            ForcingValue scrut = eval_impl(n.scrutinee, env, strat);
            auto branches = n;
            return ForcingValue([scrut, branches, env, strat](
                                    const Context& w, const Continuation& k) {
              return scrut(w, [branches, env, strat, k](const Context& w2,
                                                        const StrongPtr& sv) {
                if (auto* l = std::get_if<StrongValue::Left>(&sv->node))
                  return eval_impl(branches.left_body,
                                   env.with_proof(branches.left_var, l->value),
                                   strat)(w2, k);
                const auto& r = std::get<StrongValue::Right>(sv->node);
                return eval_impl(branches.right_body,
                                 env.with_proof(branches.right_var, r.value),
                                 strat)(w2, k);
              });
            });
          },
          [&](const Term::Gen& n) {
            TermPtr body = n.body;
            std::string v = n.var;
            return unit(strong(StrongValue::All{
                [body, v, env, strat](const Context&, const Individual& t) {
                  return eval_impl(body, env.with_individual(v, t), strat);
                }}));
          },
          [&](const Term::IApp& n) {
            ForcingValue fn_v = eval_impl(n.fn, env, strat);
            Individual t = env.resolve(n.arg);
            return ForcingValue([fn_v, t](const Context& w,
                                          const Continuation& k) {
              return fn_v(w, [t, k](const Context& w2, const StrongPtr& fv) {
                return std::get<StrongValue::All>(fv->node).instantiate(w2, t)(
                    w2, k);
              });
            });
          },
          [&](const Term::Wit& n) {
            return unit(strong(StrongValue::Wit{
                env.resolve(n.witness), eval_impl(n.body, env, strat)}));
          },
          [&](const Term::Dest& n) {
            ForcingValue scrut = eval_impl(n.scrutinee, env, strat);
            auto node = n;
            return ForcingValue([scrut, node, env, strat](
                                    const Context& w, const Continuation& k) {
              return scrut(w, [node, env, strat, k](const Context& w2,
                                                    const StrongPtr& sv) {
                const auto& wv = std::get<StrongValue::Wit>(sv->node);
                Env env2 = env.with_individual(node.ind_var, wv.witness)
                               .with_proof(node.proof_var, wv.value);
                return eval_impl(node.body, env2, strat)(w2, k);
              });
            });
          },
      },
      p->node);
}

}  // namespace

ForcingValue eval(const Context& ctx, const TermPtr& p, const FormulaPtr& goal,
                  const Env& env, Strategy strategy) {
  if (debug_validation()) check(ctx, p, goal);
  return eval_impl(p, env, strategy);
}

TermPtr reify(const Context& world, const FormulaPtr& formula,
              const ForcingValue& v, NameSupply& names) {
  if (is_atomic(formula)) return run(v, formula, world);
  NameSupply* nm = &names;
  return std::visit(
      overloaded{
          [&](const Formula::Imp& i) {
            return v(world, [i, nm](const Context& w, const StrongPtr& sv) {
              std::string a = nm->fresh_proof_var();
              Context w2 = w.with_hypothesis(a, i.hyp);
              ForcingValue arg = reflect(w2, i.hyp, var(a), *nm);
              ForcingValue body =
                  std::get<StrongValue::Fun>(sv->node).apply(w2, arg);
              return lam(a, reify(w2, i.concl, body, *nm));
            });
          },
          [&](const Formula::And& c) {
            return v(world, [c, nm](const Context& w, const StrongPtr& sv) {
              const auto& pr = std::get<StrongValue::Pair>(sv->node);
              return pair(reify(w, c.left, pr.left, *nm),
                          reify(w, c.right, pr.right, *nm));
            });
          },
          [&](const Formula::Or& o) {
            return v(world, [o, nm](const Context& w, const StrongPtr& sv) {
              if (auto* l = std::get_if<StrongValue::Left>(&sv->node))
                return inj(1, reify(w, o.left, l->value, *nm));
              const auto& r = std::get<StrongValue::Right>(sv->node);
              return inj(2, reify(w, o.right, r.value, *nm));
            });
          },
          [&](const Formula::Forall& f) {
            return v(world, [f, nm](const Context& w, const StrongPtr& sv) {
              std::string x = nm->fresh_ind_var();
              Context w2 = w.with_ind_var(x);
              FormulaPtr inst = subst_ind_formula(f.body, f.var, ivar(x));
              ForcingValue body =
                  std::get<StrongValue::All>(sv->node).instantiate(w2, ivar(x));
              return gen(x, reify(w2, inst, body, *nm));
            });
          },
          [&](const Formula::Exists& ex) {
            return v(world, [ex, nm](const Context& w, const StrongPtr& sv) {
              const auto& wv = std::get<StrongValue::Wit>(sv->node);
              FormulaPtr inst = subst_ind_formula(ex.body, ex.var, wv.witness);
              return wit(wv.witness, reify(w, inst, wv.value, *nm));
            });
          },
          [&](const Formula::Atom&) -> TermPtr {
            return run(v, formula, world);  // unreachable; handled above
          },
      },
      formula->node);
}

ForcingValue reflect(const Context& world, const FormulaPtr& formula,
                     const TermPtr& neutral, NameSupply& names) {
  if (!is_neutral(neutral))
    throw NotNeutral("reflect of non-neutral term " + print_term(neutral));
  if (is_atomic(formula)) return unit(strong(StrongValue::Atom{neutral}));
  NameSupply* nm = &names;
  return std::visit(
      overloaded{
          [&](const Formula::Imp& i) {
            TermPtr e = neutral;
            return unit(strong(StrongValue::Fun{
                [e, i, nm](const Context& w, const ForcingValue& arg) {
                  TermPtr arg_t = reify(w, i.hyp, arg, *nm);
                  return reflect(w, i.concl, app(e, arg_t), *nm);
                }}));
          },
          [&](const Formula::And& c) {
            return unit(strong(StrongValue::Pair{
                reflect(world, c.left, proj(1, neutral), names),
                reflect(world, c.right, proj(2, neutral), names)}));
          },
          [&](const Formula::Forall& f) {
            TermPtr e = neutral;
            return unit(strong(StrongValue::All{
                [e, f, nm](const Context& w, const Individual& t) {
                  return reflect(w, subst_ind_formula(f.body, f.var, t),
                                 iapp(e, t), *nm);
                }}));
          },
          [&](const Formula::Or& o) {
            // The crux case: a blocked disjunction emits a case and runs
            // the continuation once per branch.
            TermPtr e = neutral;
            return ForcingValue([e, o, nm](const Context& w,
                                           const Continuation& k) {
              std::string a1 = nm->fresh_proof_var();
              Context w1 = w.with_hypothesis(a1, o.left);
              TermPtr left = k(
                  w1, strong(StrongValue::Left{reflect(w1, o.left, var(a1), *nm)}));
              std::string a2 = nm->fresh_proof_var();
              Context w2 = w.with_hypothesis(a2, o.right);
              TermPtr right = k(w2, strong(StrongValue::Right{
                                      reflect(w2, o.right, var(a2), *nm)}));
              return kase(e, a1, left, a2, right);
            });
          },
          [&](const Formula::Exists& ex) {
            TermPtr e = neutral;
            FormulaPtr body = ex.body;
            std::string bound = ex.var;
            return ForcingValue([e, body, bound, nm](const Context& w,
                                                     const Continuation& k) {
              std::string x = nm->fresh_ind_var();
              std::string a = nm->fresh_proof_var();
              FormulaPtr inst = subst_ind_formula(body, bound, ivar(x));
              Context w1 = w.with_ind_var(x).with_hypothesis(a, inst);
              TermPtr out = k(w1, strong(StrongValue::Wit{
                                     ivar(x), reflect(w1, inst, var(a), *nm)}));
              return dest(e, x, a, out);
            });
          },
          [&](const Formula::Atom&) -> ForcingValue {
            return unit(strong(StrongValue::Atom{neutral}));
          },
      },
      formula->node);
}

TermPtr normalize(const Context& ctx, const TermPtr& p, const FormulaPtr& goal,
                  Strategy strategy) {
  check(ctx, p, goal);
  if (strategy == Strategy::CallByValue && !ctx.hypotheses.empty())
    throw CbvOpenTerm();
  NameSupply names(ctx);
  Env env;
  for (const auto& [name, f] : ctx.hypotheses)
    env.proofs.insert_or_assign(name, reflect(ctx, f, var(name), names));
  for (const auto& x : ctx.ind_vars) env.individuals.insert_or_assign(x, ivar(x));
  ForcingValue v = eval(ctx, p, goal, env, strategy);
  TermPtr nf = reify(ctx, goal, v, names);
  check(ctx, nf, goal);  // outputs are re-derived, never trusted
  return nf;
}

}  // namespace mqc
