#include "doctest.h"
#include "mqc/nbe.hpp"
#include "mqc/parse.hpp"
#include "mqc/semantics.hpp"
#include "mqc/testgen.hpp"
#include "mqc/typecheck.hpp"

using namespace mqc;

namespace {

// The fixed bench context used by the monad-law checks.
Context law_ctx() { return parse_context("h : X -> X.\na : X.\nc : X \\/ X."); }

Env base_env(const Context& ctx, NameSupply& names) {
  Env env;
  for (const auto& [name, f] : ctx.hypotheses)
    env.proofs.insert_or_assign(name, reflect(ctx, f, var(name), names));
  return env;
}

// A nontrivial Kleisli arrow at atom X: wrap the delivered derivation
// in an application of the hypothesis h : X -> X.
std::function<ForcingValue(const Context&, const StrongPtr&)> wrap_h(
    NameSupply& names) {
  NameSupply* nm = &names;
  return [nm](const Context& w, const StrongPtr& sv) {
    TermPtr e = std::get<StrongValue::Atom>(sv->node).term;
    return reflect(w, atom("X"), app(var("h"), e), *nm);
  };
}

}  // namespace

TEST_CASE("unit and run") {
  Context ctx = parse_context("a : X.");
  CHECK(alpha_eq(run(unit(strong(StrongValue::Atom{var("a")})), atom("X"), ctx),
                 var("a")));
  CHECK_THROWS_AS(run(unit(strong(StrongValue::Atom{var("a")})),
                      parse_formula("X -> X"), ctx),
                  FormulaNotAtomic);
}

TEST_CASE("run of reflect at an atom is the identity") {
  Context ctx = parse_context("a : X.");
  NameSupply names(ctx);
  CHECK(alpha_eq(run(reflect(ctx, atom("X"), var("a"), names), atom("X"), ctx),
                 var("a")));
}

TEST_CASE("monad left identity") {
  Context ctx = law_ctx();
  FormulaPtr x = atom("X");
  NameSupply n1(ctx), n2(ctx);
  StrongPtr sv = strong(StrongValue::Atom{var("a")});
  TermPtr lhs = run(bind(wrap_h(n1), unit(sv)), x, ctx);
  TermPtr rhs = run(wrap_h(n2)(ctx, sv), x, ctx);
  CHECK(alpha_eq(lhs, rhs));
}

TEST_CASE("monad right identity") {
  Context ctx = law_ctx();
  FormulaPtr x = atom("X");
  for (int i = 0; i < 20; ++i) {
    TermPtr p = gen_term(ctx, x, 8, 7000 + static_cast<unsigned>(i));
    NameSupply n1(ctx), n2(ctx);
    ForcingValue v1 = eval(ctx, p, x, base_env(ctx, n1));
    ForcingValue v2 = eval(ctx, p, x, base_env(ctx, n2));
    auto ret = [](const Context&, const StrongPtr& sv) { return unit(sv); };
    CHECK(alpha_eq(run(bind(ret, v1), x, ctx), run(v2, x, ctx)));
  }
}

TEST_CASE("monad associativity, observed through run at an atom") {
  Context ctx = law_ctx();
  FormulaPtr x = atom("X");
  for (int i = 0; i < 100; ++i) {
    TermPtr p = gen_term(ctx, x, 8, 7100 + static_cast<unsigned>(i));
    NameSupply n1(ctx), n2(ctx);
    ForcingValue v1 = eval(ctx, p, x, base_env(ctx, n1));
    ForcingValue v2 = eval(ctx, p, x, base_env(ctx, n2));
    auto f1 = wrap_h(n1), g1 = wrap_h(n1);
    auto f2 = wrap_h(n2), g2 = wrap_h(n2);
    TermPtr lhs = run(bind(g1, bind(f1, v1)), x, ctx);
    TermPtr rhs = run(bind([&](const Context& w, const StrongPtr& sv) {
                        return bind(g2, f2(w, sv));
                      },
                      v2),
                  x, ctx);
    CHECK(alpha_eq(lhs, rhs));
  }
}

TEST_CASE("monotonicity: values can be run at extended worlds") {
  Context ctx = law_ctx();
  FormulaPtr x = atom("X");
  for (int i = 0; i < 50; ++i) {
    TermPtr p = gen_term(ctx, x, 8, 7300 + static_cast<unsigned>(i));
    NameSupply names(ctx);
    ForcingValue v = eval(ctx, p, x, base_env(ctx, names));
    Context bigger =
        ctx.with_hypothesis("zz", parse_formula("Y \\/ Z")).with_ind_var("w");
    CHECK(bigger.extends(ctx));
    names.reserve("zz");
    names.reserve("w");
    TermPtr r = run(v, x, bigger);
    CHECK(checks(bigger, r, x));
  }
}

TEST_CASE("debug validation re-typechecks run results") {
  set_debug_validation(true);
  Context ctx = parse_context("a : X.");
  NameSupply names(ctx);
  CHECK_NOTHROW(run(reflect(ctx, atom("X"), var("a"), names), atom("X"), ctx));
  // a continuation delivering an ill-typed payload is caught
  ForcingValue bogus = unit(strong(StrongValue::Atom{var("nope")}));
  CHECK_THROWS_AS(run(bogus, atom("X"), ctx), TypeError);
  set_debug_validation(false);
}

TEST_CASE("strong_value_matches pairs variants with formula shapes") {
  CHECK(strong_value_matches(StrongValue{StrongValue::Atom{var("a")}},
                             atom("X")));
  CHECK_FALSE(strong_value_matches(StrongValue{StrongValue::Atom{var("a")}},
                                   parse_formula("X -> X")));
  StrongValue pairv{StrongValue::Pair{unit(strong(StrongValue::Atom{var("a")})),
                                      unit(strong(StrongValue::Atom{var("a")}))}};
  CHECK(strong_value_matches(pairv, parse_formula("X /\\ Y")));
  CHECK_FALSE(strong_value_matches(pairv, parse_formula("X \\/ Y")));
}
