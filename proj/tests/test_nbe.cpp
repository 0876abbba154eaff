#include "doctest.h"
#include "mqc/nbe.hpp"
#include "mqc/parse.hpp"
#include "mqc/print.hpp"
#include "mqc/reduction.hpp"
#include "mqc/testgen.hpp"
#include "mqc/typecheck.hpp"

using namespace mqc;

namespace {

std::string norm(const std::string& ctx_text, const std::string& term_text,
                 const std::string& type_text,
                 Strategy strat = Strategy::CallByName) {
  Context ctx = parse_context(ctx_text);
  TermPtr p = parse_term(term_text, ctx.constants);
  FormulaPtr goal = parse_formula(type_text, ctx.constants);
  return print_term(normalize(ctx, p, goal, strat));
}

}  // namespace

TEST_CASE("fixed normalization traces") {
  CHECK(norm("", "fun a => a", "X -> X") == "fun a0 => a0");
  CHECK(norm("c : X \\/ Y.", "c", "X \\/ Y") ==
        "case c of inl a0 => inl a0 | inr a1 => inr a1");
  CHECK(norm("b : X.",
             "case inl b of inl a1 => inr a1 | inr a2 => inl a2",
             "X \\/ X") == "inr b");
  CHECK(norm("c : X \\/ Y.\nd : X.",
             "(case c of inl a1 => fun b => b | inr a2 => fun b => b) d",
             "X") == "case c of inl a0 => d | inr a1 => d");
}

TEST_CASE("reification eta-expands at implication") {
  CHECK(norm("f : X -> X.", "f", "X -> X") == "fun a0 => f a0");
  CHECK(norm("p : X /\\ Y.", "p", "X /\\ Y") == "(fst p, snd p)");
}

TEST_CASE("quantifier eta-expansions") {
  CHECK(norm("f : forall x. P(x).", "f", "forall x. P(x)") ==
        "gen x0 => f [x0]");
  CHECK(norm("e : exists x. P(x).", "e", "exists x. P(x)") ==
        "dest e as [x0, a1] in [x0, a1]");
}

TEST_CASE("eval of a variable returns its binding") {
  Context ctx = parse_context("b : X.");
  NameSupply names(ctx);
  Env env;
  env.proofs.insert_or_assign("b", reflect(ctx, atom("X"), var("b"), names));
  ForcingValue v =
      eval(ctx, parse_term("(fun a => a) b"), atom("X"), env);
  CHECK(alpha_eq(run(v, atom("X"), ctx), var("b")));
}

TEST_CASE("eval throws on variables missing from the environment") {
  Context ctx = parse_context("b : X.");
  CHECK_THROWS_AS(eval(ctx, var("b"), atom("X"), Env{}), UnboundInEnv);
}

TEST_CASE("reflect rejects non-neutral terms") {
  Context ctx;
  NameSupply names(ctx);
  CHECK_THROWS_AS(reflect(ctx, parse_formula("X -> X"), lam("a", var("a")),
                          names),
                  NotNeutral);
}

TEST_CASE("normalize rejects ill-typed input") {
  CHECK_THROWS_AS(normalize({}, lam("a", var("a")), parse_formula("X -> Y")),
                  TypeError);
}

TEST_CASE("call-by-value agrees on closed terms and rejects open ones") {
  CHECK(norm("", "fun a => a", "X -> X", Strategy::CallByValue) ==
        "fun a0 => a0");
  CHECK(norm("", "fun a => fun b => a", "X -> Y -> X",
             Strategy::CallByValue) ==
        norm("", "fun a => fun b => a", "X -> Y -> X"));
  Context ctx = parse_context("b : X.");
  CHECK_THROWS_AS(
      normalize(ctx, var("b"), atom("X"), Strategy::CallByValue),
      CbvOpenTerm);
}

TEST_CASE("normalization is invariant under beta steps") {
  Context ctx = parse_context("c : X \\/ Y.\nd : X.\nf : X -> X.");
  FormulaPtr goal = atom("X");
  TermPtr p = parse_term("(fun a => f a) ((fun b => b) d)");
  TermPtr nf = normalize(ctx, p, goal);
  TermPtr q = p;
  while (auto next = step(q)) {
    q = *next;
    CHECK(alpha_eq(normalize(ctx, q, goal), nf));
  }
  CHECK(alpha_eq(normalize(ctx, beta_nf(p), goal), nf));
}

TEST_CASE("idempotence and grammar membership on generated terms") {
  for (int i = 0; i < 100; ++i) {
    Problem prob = gen_problem(5 + i % 20, 8200 + static_cast<unsigned>(i));
    TermPtr nf = normalize(prob.ctx, prob.term, prob.goal);
    CHECK(is_normal(nf));
    CHECK(checks(prob.ctx, nf, prob.goal));
    CHECK(alpha_eq(normalize(prob.ctx, nf, prob.goal), nf));
  }
}

TEST_CASE("normalize performs commuting conversions the oracle cannot") {
  // the scrutinee blocks but NBE pushes the application into the case
  Context ctx = parse_context("c : X \\/ Y.\nd : X.");
  TermPtr p = parse_term(
      "(case c of inl a1 => fun b => b | inr a2 => fun b => b) d");
  TermPtr oracle = beta_nf(p);
  CHECK(alpha_eq(oracle, p));  // no beta redex: the oracle is stuck
  TermPtr nf = normalize(ctx, p, atom("X"));
  CHECK(is_normal(nf));
  CHECK_FALSE(alpha_eq(nf, p));
}
