#include "doctest.h"
#include "mqc/parse.hpp"
#include "mqc/print.hpp"
#include "mqc/reduction.hpp"
#include "mqc/testgen.hpp"
#include "mqc/typecheck.hpp"

using namespace mqc;

TEST_CASE("generation is reproducible for a fixed seed") {
  for (int i = 0; i < 20; ++i) {
    Problem a = gen_problem(10, 42 + static_cast<unsigned>(i));
    Problem b = gen_problem(10, 42 + static_cast<unsigned>(i));
    CHECK(print_term(a.term) == print_term(b.term));
    CHECK(print_formula(a.goal) == print_formula(b.goal));
    CHECK(print_context(a.ctx) == print_context(b.ctx));
  }
  Context ctx = parse_context("c : X \\/ Y.");
  FormulaPtr goal = parse_formula("Y \\/ X");
  CHECK(print_term(gen_term(ctx, goal, 8, 7)) ==
        print_term(gen_term(ctx, goal, 8, 7)));
}

TEST_CASE("every generated term typechecks") {
  for (int i = 0; i < 100; ++i) {
    Problem prob = gen_problem(5 + i % 24, 1000 + static_cast<unsigned>(i));
    CHECK(checks(prob.ctx, prob.term, prob.goal));
  }
}

TEST_CASE("generation fails on an uninhabited goal") {
  CHECK_THROWS_AS(gen_term({}, atom("X"), 3, 1), GenerationFailed);
  CHECK_THROWS_AS(gen_term({}, atom("X"), 50, 99), GenerationFailed);
}

TEST_CASE("goal-directed search uses disjunction hypotheses") {
  Context ctx = parse_context("c : X \\/ Y.");
  FormulaPtr goal = parse_formula("Y \\/ X");
  TermPtr p = gen_term(ctx, goal, 8, 11);
  CHECK(checks(ctx, p, goal));
}

TEST_CASE("inject_redexes wraps in identity expansions") {
  TermPtr p = inject_redexes(var("b"), 1, 3);
  CHECK(print_term(p) == "(fun a0 => a0) b");
  CHECK(alpha_eq(p, app(lam("a0", var("a0")), var("b"))));
}

TEST_CASE("inject_redexes preserves typing and beta-equality") {
  for (int i = 0; i < 100; ++i) {
    Problem prob = gen_problem(5 + i % 20, 2000 + static_cast<unsigned>(i));
    TermPtr p = inject_redexes(prob.term, 1 + i % 5,
                               3000 + static_cast<unsigned>(i));
    CHECK(checks(prob.ctx, p, prob.goal));
    CHECK(beta_eq(p, prob.term, 100000));
  }
}

TEST_CASE("closed generation yields terms with no free proof variables") {
  for (int i = 0; i < 50; ++i) {
    Problem prob = gen_problem(6 + i % 10, 100 + static_cast<unsigned>(i),
                               GenOptions{.quantifiers = false, .closed = true});
    CHECK(prob.ctx.hypotheses.empty());
    CHECK(free_proof_vars(prob.term).empty());
    CHECK(checks(prob.ctx, prob.term, prob.goal));
  }
}
