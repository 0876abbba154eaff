#include "mqc/testgen.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mqc/print.hpp"

namespace mqc {

namespace {

// ---------------------------------------------------------------------------
// Goal-directed term search

struct Search {
  std::mt19937_64 rng;
  // Backtracking can blow up on unlucky goals; a global step budget turns
  // pathological searches into a fast GenerationFailed instead.
  long steps = 0;
  static constexpr long kStepLimit = 3000;

  int pick(int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }
  bool coin() { return pick(2) == 0; }

  using Move = std::function<std::optional<TermPtr>()>;

  // Try moves in a weight-biased random order; first success wins.
  std::optional<TermPtr> try_moves(std::vector<std::pair<int, Move>> moves) {
    while (!moves.empty()) {
      int total = 0;
      for (const auto& [w, m] : moves) total += w;
      int roll = pick(total);
      std::size_t i = 0;
      for (; i < moves.size(); ++i) {
        roll -= moves[i].first;
        if (roll < 0) break;
      }
      if (auto r = moves[i].second()) return r;
      moves.erase(moves.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return std::nullopt;
  }

  std::optional<TermPtr> term(const Context& ctx, const FormulaPtr& goal,
                              int budget) {
    if (budget <= 0 || ++steps > kStepLimit) return std::nullopt;
    std::vector<std::pair<int, Move>> moves;

    // Eliminations from hypotheses; composite hypotheses weighted 2:1.
    for (const auto& [name, f] : ctx.hypotheses) {
      int w = is_atomic(f) ? 1 : 2;
      moves.emplace_back(w, [this, &ctx, &goal, budget, name = name, f = f] {
        return use(ctx, var(name), f, goal, budget - 1);
      });
    }

    // Introduction by goal shape.
    std::visit(
        overloaded{
            [&](const Formula::Atom&) {},
            [&](const Formula::Imp& i) {
              moves.emplace_back(1, [this, &ctx, budget, i] {
                std::string a = avoid_name("a", ctx.all_names());
                auto body =
                    term(ctx.with_hypothesis(a, i.hyp), i.concl, budget - 1);
                if (!body) return std::optional<TermPtr>();
                return std::optional<TermPtr>(lam(a, *body));
              });
            },
            [&](const Formula::And& c) {
              moves.emplace_back(1, [this, &ctx, budget, c] {
                int half = (budget - 1) / 2;
                auto l = term(ctx, c.left, std::max(half, 1));
                if (!l) return std::optional<TermPtr>();
                auto r = term(ctx, c.right, std::max(half, 1));
                if (!r) return std::optional<TermPtr>();
                return std::optional<TermPtr>(pair(*l, *r));
              });
            },
            [&](const Formula::Or& o) {
              moves.emplace_back(1, [this, &ctx, budget, o] {
                auto l = term(ctx, o.left, budget - 1);
                if (!l) return std::optional<TermPtr>();
                return std::optional<TermPtr>(inj(1, *l));
              });
              moves.emplace_back(1, [this, &ctx, budget, o] {
                auto r = term(ctx, o.right, budget - 1);
                if (!r) return std::optional<TermPtr>();
                return std::optional<TermPtr>(inj(2, *r));
              });
            },
            [&](const Formula::Forall& f) {
              moves.emplace_back(1, [this, &ctx, budget, f] {
                std::string x = avoid_name(f.var, ctx.all_names());
                auto body = term(ctx.with_ind_var(x),
                                 subst_ind_formula(f.body, f.var, ivar(x)),
                                 budget - 1);
                if (!body) return std::optional<TermPtr>();
                return std::optional<TermPtr>(gen(x, *body));
              });
            },
            [&](const Formula::Exists& ex) {
              auto inds = ctx.individuals();
              if (inds.empty()) return;
              moves.emplace_back(1, [this, &ctx, budget, ex, inds] {
                Individual t = inds[static_cast<std::size_t>(
                    pick(static_cast<int>(inds.size())))];
                auto body = term(ctx, subst_ind_formula(ex.body, ex.var, t),
                                 budget - 1);
                if (!body) return std::optional<TermPtr>();
                return std::optional<TermPtr>(wit(t, *body));
              });
            },
        },
        goal->node);

    return try_moves(std::move(moves));
  }

  // Extend the neutral spine e : have toward the goal.
  std::optional<TermPtr> use(const Context& ctx, const TermPtr& e,
                             const FormulaPtr& have, const FormulaPtr& goal,
                             int budget) {
    if (alpha_eq_formula(have, goal)) return e;
    if (budget <= 0 || ++steps > kStepLimit) return std::nullopt;
    return std::visit(
        overloaded{
            [&](const Formula::Atom&) -> std::optional<TermPtr> {
              return std::nullopt;
            },
            [&](const Formula::And& c) -> std::optional<TermPtr> {
              bool left_first = coin();
              const FormulaPtr& f1 = left_first ? c.left : c.right;
              const FormulaPtr& f2 = left_first ? c.right : c.left;
              int i1 = left_first ? 1 : 2, i2 = 3 - i1;
              if (auto r = use(ctx, proj(i1, e), f1, goal, budget - 1))
                return r;
              return use(ctx, proj(i2, e), f2, goal, budget - 1);
            },
            [&](const Formula::Imp& i) -> std::optional<TermPtr> {
              auto arg = term(ctx, i.hyp, std::max((budget - 1) / 2, 1));
              if (!arg) return std::nullopt;
              return use(ctx, app(e, *arg), i.concl, goal, (budget - 1) / 2);
            },
            [&](const Formula::Forall& f) -> std::optional<TermPtr> {
              auto inds = ctx.individuals();
              if (inds.empty()) return std::nullopt;
              Individual t = inds[static_cast<std::size_t>(
                  pick(static_cast<int>(inds.size())))];
              return use(ctx, iapp(e, t),
                         subst_ind_formula(f.body, f.var, t), goal, budget - 1);
            },
            [&](const Formula::Or& o) -> std::optional<TermPtr> {
              std::string a1 = avoid_name("a", ctx.all_names());
              Context c1 = ctx.with_hypothesis(a1, o.left);
              auto l = term(c1, goal, std::max((budget - 1) / 2, 1));
              if (!l) return std::nullopt;
              std::string a2 = avoid_name("a", ctx.all_names());
              Context c2 = ctx.with_hypothesis(a2, o.right);
              auto r = term(c2, goal, std::max((budget - 1) / 2, 1));
              if (!r) return std::nullopt;
              return kase(e, a1, *l, a2, *r);
            },
            [&](const Formula::Exists& ex) -> std::optional<TermPtr> {
              std::string x = avoid_name(ex.var, ctx.all_names());
              std::string a = avoid_name("a", ctx.all_names());
              Context c1 = ctx.with_ind_var(x).with_hypothesis(
                  a, subst_ind_formula(ex.body, ex.var, ivar(x)));
              auto body = term(c1, goal, budget - 1);
              if (!body) return std::nullopt;
              return dest(e, x, a, *body);
            },
        },
        have->node);
  }
};

// ---------------------------------------------------------------------------
// Redex injection

void collect_names(const TermPtr& p, std::set<std::string>& out) {
  std::visit(
      overloaded{
          [&](const Term::Var& n) { out.insert(n.name); },
          [&](const Term::Lam& n) {
            out.insert(n.var);
            collect_names(n.body, out);
          },
          [&](const Term::App& n) {
            collect_names(n.fn, out);
            collect_names(n.arg, out);
          },
          [&](const Term::Pair& n) {
            collect_names(n.first, out);
            collect_names(n.second, out);
          },
          [&](const Term::Proj& n) { collect_names(n.arg, out); },
          [&](const Term::Inj& n) { collect_names(n.arg, out); },
          [&](const Term::Case& n) {
            collect_names(n.scrutinee, out);
            out.insert(n.left_var);
            collect_names(n.left_body, out);
            out.insert(n.right_var);
            collect_names(n.right_body, out);
          },
          [&](const Term::Gen& n) {
            out.insert(n.var);
            collect_names(n.body, out);
          },
          [&](const Term::IApp& n) {
            out.insert(n.arg.name);
            collect_names(n.fn, out);
          },
          [&](const Term::Wit& n) {
            out.insert(n.witness.name);
            collect_names(n.body, out);
          },
          [&](const Term::Dest& n) {
            collect_names(n.scrutinee, out);
            out.insert(n.ind_var);
            out.insert(n.proof_var);
            collect_names(n.body, out);
          },
      },
      p->node);
}

// Preorder-indexed rewrite: wrap subterm number target in (fun a => a) _.
TermPtr wrap_at(const TermPtr& p, std::size_t target, std::size_t& index,
                const std::string& fresh) {
  if (index++ == target) return app(lam(fresh, var(fresh)), p);
  return std::visit(
      overloaded{
          [&](const Term::Var&) { return p; },
          [&](const Term::Lam& n) {
            return lam(n.var, wrap_at(n.body, target, index, fresh));
          },
          [&](const Term::App& n) {
            TermPtr f = wrap_at(n.fn, target, index, fresh);
            return app(f, wrap_at(n.arg, target, index, fresh));
          },
          [&](const Term::Pair& n) {
            TermPtr a = wrap_at(n.first, target, index, fresh);
            return pair(a, wrap_at(n.second, target, index, fresh));
          },
          [&](const Term::Proj& n) {
            return proj(n.index, wrap_at(n.arg, target, index, fresh));
          },
          [&](const Term::Inj& n) {
            return inj(n.index, wrap_at(n.arg, target, index, fresh));
          },
          [&](const Term::Case& n) {
            TermPtr s = wrap_at(n.scrutinee, target, index, fresh);
            TermPtr l = wrap_at(n.left_body, target, index, fresh);
            return kase(s, n.left_var, l, n.right_var,
                        wrap_at(n.right_body, target, index, fresh));
          },
          [&](const Term::Gen& n) {
            return gen(n.var, wrap_at(n.body, target, index, fresh));
          },
          [&](const Term::IApp& n) {
            return iapp(wrap_at(n.fn, target, index, fresh), n.arg);
          },
          [&](const Term::Wit& n) {
            return wit(n.witness, wrap_at(n.body, target, index, fresh));
          },
          [&](const Term::Dest& n) {
            TermPtr s = wrap_at(n.scrutinee, target, index, fresh);
            return dest(s, n.ind_var, n.proof_var,
                        wrap_at(n.body, target, index, fresh));
          },
      },
      p->node);
}

}  // namespace

TermPtr gen_term(const Context& ctx, const FormulaPtr& goal, int size,
                 std::uint64_t seed) {
  Search s{std::mt19937_64(seed)};
  if (auto r = s.term(ctx, goal, size)) return *r;
  throw GenerationFailed("no inhabitant of " + print_formula(goal) +
                         " found within size " + std::to_string(size));
}

TermPtr inject_redexes(const TermPtr& p, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::string> names;
  collect_names(p, names);
  TermPtr cur = p;
  int counter = 0;
  for (int i = 0; i < n; ++i) {
    std::string fresh;
    do {
      fresh = "a" + std::to_string(counter++);
    } while (names.count(fresh));
    names.insert(fresh);
    std::size_t total = node_count(cur);
    std::size_t target = rng() % total;
    std::size_t index = 0;
    cur = wrap_at(cur, target, index, fresh);
  }
  return cur;
}

FormulaPtr gen_formula(std::mt19937_64& rng, int depth,
                       const std::vector<Individual>& inds, bool quantifiers) {
  auto pick = [&](int n) {
    return static_cast<int>(rng() % static_cast<unsigned>(n));
  };
  if (depth <= 0) {
    static const char* props[] = {"X", "Y", "Z"};
    if (!inds.empty() && pick(2) == 0) {
      const char* preds[] = {"P", "Q"};
      Individual t = inds[static_cast<std::size_t>(
          pick(static_cast<int>(inds.size())))];
      return atom(preds[pick(2)], {t});
    }
    return atom(props[pick(3)]);
  }
  int n_conn = quantifiers ? 5 : 3;
  int choice = pick(n_conn);
  switch (choice) {
    case 0:
      return conj(gen_formula(rng, depth - 1, inds, quantifiers),
                  gen_formula(rng, depth - 1, inds, quantifiers));
    case 1:
      return disj(gen_formula(rng, depth - 1, inds, quantifiers),
                  gen_formula(rng, depth - 1, inds, quantifiers));
    case 2:
      return imp(gen_formula(rng, depth - 1, inds, quantifiers),
                 gen_formula(rng, depth - 1, inds, quantifiers));
    case 3:
    case 4: {
      std::set<std::string> used;
      for (const auto& t : inds) used.insert(t.name);
      std::string x = avoid_name("x", used);
      std::vector<Individual> inds2 = inds;
      inds2.push_back(ivar(x));
      FormulaPtr body = gen_formula(rng, depth - 1, inds2, quantifiers);
      return choice == 3 ? forall(x, body) : exists(x, body);
    }
  }
  return atom("X");
}

Problem gen_problem(int size, std::uint64_t seed, const GenOptions& opts) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) {
    return static_cast<int>(rng() % static_cast<unsigned>(n));
  };

  Context ctx;
  if (!opts.closed) {
    if (opts.quantifiers) {
      ctx = ctx.with_constant("t");
      if (pick(2) == 0) ctx = ctx.with_constant("u");
    }
    int n_hyps = 2 + pick(3);
    auto inds = ctx.individuals();
    for (int i = 0; i < n_hyps; ++i)
      ctx = ctx.with_hypothesis("h" + std::to_string(i),
                                gen_formula(rng, 1 + pick(2), inds,
                                            opts.quantifiers));
  }
  auto inds = ctx.individuals();

  for (int attempt = 0; attempt < 200; ++attempt) {
    FormulaPtr goal = gen_formula(rng, 1 + pick(2), inds, opts.quantifiers);
    // Later attempts fall back to trivially inhabited implication goals.
    if (attempt >= 100) goal = imp(goal, goal);
    try {
      TermPtr p = gen_term(ctx, goal, size, rng());
      return Problem{ctx, goal, p};
    } catch (const GenerationFailed&) {
    }
  }
  throw GenerationFailed("no provable goal found for seed " +
                         std::to_string(seed));
}

}  // namespace mqc
