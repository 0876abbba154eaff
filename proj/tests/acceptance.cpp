// Acceptance harness: one line per criterion, PASS/FAIL, nonzero exit on
// any failure. Deterministic seeds; an optional argv[1] overrides the
// base seed for exploratory runs.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mqc/nbe.hpp"
#include "mqc/parse.hpp"
#include "mqc/print.hpp"
#include "mqc/reduction.hpp"
#include "mqc/semantics.hpp"
#include "mqc/testgen.hpp"
#include "mqc/typecheck.hpp"

using namespace mqc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::uint64_t g_base_seed = 1;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << number << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Criteria 1-3 share one corpus of 1000 generated problems.
void criteria_1_to_3() {
  Clock::time_point t0 = Clock::now();
  int n = 1000, typed = 0, normal = 0, idem = 0;
  std::string first_failure;
  for (int i = 0; i < n; ++i) {
    int size = 5 + i % 36;
    Problem prob = gen_problem(size, g_base_seed * 100000 + static_cast<unsigned>(i));
    try {
      TermPtr nf = normalize(prob.ctx, prob.term, prob.goal);
      if (checks(prob.ctx, nf, prob.goal)) ++typed;
      if (is_normal(nf)) ++normal;
      if (alpha_eq(normalize(prob.ctx, nf, prob.goal), nf)) ++idem;
    } catch (const std::exception& e) {
      if (first_failure.empty())
        first_failure = "case " + std::to_string(i) + ": " + e.what();
    }
  }
  double secs = seconds_since(t0);
  std::ostringstream d1;
  d1 << typed << "/" << n << " in " << secs << "s";
  if (!first_failure.empty()) d1 << "; " << first_failure;
  report(1, "type preservation of normalize on 1000 generated terms",
         typed == n && secs < 60.0, d1.str());
  report(2, "normal-grammar membership of all outputs", normal == n,
         std::to_string(normal) + "/" + std::to_string(n));
  report(3, "idempotence of normalize", idem == n,
         std::to_string(idem) + "/" + std::to_string(n));
}

void criterion_4() {
  int n = 500, ok = 0;
  std::string first_failure;
  for (int i = 0; i < n; ++i) {
    try {
      Problem prob = gen_problem(5 + i % 24,
                                 g_base_seed * 200000 + static_cast<unsigned>(i));
      TermPtr injected = inject_redexes(prob.term, 1 + i % 5,
                                        g_base_seed * 300000 + static_cast<unsigned>(i));
      TermPtr nf = normalize(prob.ctx, prob.term, prob.goal);
      TermPtr nf_injected = normalize(prob.ctx, injected, prob.goal);
      TermPtr oracle = beta_nf(injected, 100000);
      TermPtr nf_oracle = normalize(prob.ctx, oracle, prob.goal);
      if (alpha_eq(nf, nf_injected) && alpha_eq(nf, nf_oracle)) ++ok;
    } catch (const std::exception& e) {
      if (first_failure.empty())
        first_failure = "case " + std::to_string(i) + ": " + e.what();
    }
  }
  std::string d = std::to_string(ok) + "/" + std::to_string(n);
  if (!first_failure.empty()) d += "; " + first_failure;
  report(4, "normalize is invariant under injected beta-redexes", ok == n, d);
}

void criterion_5() {
  auto norm = [](const std::string& ctx_text, const std::string& term_text,
                 const std::string& type_text) {
    Context ctx = parse_context(ctx_text);
    TermPtr p = parse_term(term_text, ctx.constants);
    FormulaPtr goal = parse_formula(type_text, ctx.constants);
    return print_term(normalize(ctx, p, goal));
  };
  bool ok = true;
  std::string detail;
  auto expect = [&](const std::string& got, const std::string& want) {
    if (got != want) {
      ok = false;
      if (detail.empty()) detail = "got \"" + got + "\", want \"" + want + "\"";
    }
  };
  try {
    expect(norm("", "fun a => a", "X -> X"), "fun a0 => a0");
    expect(norm("c : X \\/ Y.", "c", "X \\/ Y"),
           "case c of inl a0 => inl a0 | inr a1 => inr a1");
    expect(norm("b : X.",
                "case inl b of inl a1 => inr a1 | inr a2 => inl a2",
                "X \\/ X"),
           "inr b");
    expect(norm("c : X \\/ Y. d : X.",
                "(case c of inl a1 => fun b => b | inr a2 => fun b => b) d",
                "X"),
           "case c of inl a0 => d | inr a1 => d");
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(5, "fixed regression outputs, byte-exact", ok, detail);
}

void criterion_6() {
  int n = 200, agree = 0;
  std::string first_failure;
  for (int i = 0; i < n; ++i) {
    try {
      Problem prob =
          gen_problem(5 + i % 20, g_base_seed * 400000 + static_cast<unsigned>(i),
                      GenOptions{.quantifiers = false, .closed = true});
      TermPtr cbn = normalize(prob.ctx, prob.term, prob.goal,
                              Strategy::CallByName);
      TermPtr cbv = normalize(prob.ctx, prob.term, prob.goal,
                              Strategy::CallByValue);
      if (alpha_eq(cbn, cbv)) ++agree;
    } catch (const std::exception& e) {
      if (first_failure.empty())
        first_failure = "case " + std::to_string(i) + ": " + e.what();
    }
  }
  bool rejects_open = false;
  try {
    Context open = parse_context("b : X.");
    normalize(open, var("b"), atom("X"), Strategy::CallByValue);
  } catch (const CbvOpenTerm&) {
    rejects_open = true;
  }
#ifdef NBE_CLI_PATH
  // the spec phrases rejection as an exit status: verify through the CLI
  int rc = std::system(NBE_CLI_PATH
                       " normalize --strategy cbv -c \"b : X.\" -e b -t X"
                       " > /dev/null 2>&1");
  rejects_open = rejects_open && rc != -1 && WEXITSTATUS(rc) == 3;
#endif
  std::string d = std::to_string(agree) + "/" + std::to_string(n) +
                  (rejects_open ? ", open-term CBV rejected"
                                : ", open-term CBV NOT rejected");
  if (!first_failure.empty()) d += "; " + first_failure;
  report(6, "call-by-name and call-by-value agree on closed terms",
         agree == n && rejects_open, d);
}

void criterion_7() {
  Context ctx = parse_context("h : X -> X. a : X. c : X \\/ X.");
  FormulaPtr x = atom("X");
  auto env_of = [&](NameSupply& names) {
    Env env;
    for (const auto& [name, f] : ctx.hypotheses)
      env.proofs.insert_or_assign(name, reflect(ctx, f, var(name), names));
    return env;
  };
  auto wrap_h = [](NameSupply& names) {
    NameSupply* nm = &names;
    return std::function<ForcingValue(const Context&, const StrongPtr&)>(
        [nm](const Context& w, const StrongPtr& sv) {
          TermPtr e = std::get<StrongValue::Atom>(sv->node).term;
          return reflect(w, atom("X"), app(var("h"), e), *nm);
        });
  };
  int n = 100, ok = 0;
  std::string first_failure;
  for (int i = 0; i < n; ++i) {
    try {
      TermPtr p = gen_term(ctx, x, 8, g_base_seed * 500000 + static_cast<unsigned>(i));
      bool laws = true;
      {  // left identity: bind(f, unit(sv)) = f(sv)
        NameSupply n1(ctx), n2(ctx);
        StrongPtr sv = strong(StrongValue::Atom{var("a")});
        laws = laws && alpha_eq(run(bind(wrap_h(n1), unit(sv)), x, ctx),
                                run(wrap_h(n2)(ctx, sv), x, ctx));
      }
      {  // right identity: bind(unit, v) = v
        NameSupply n1(ctx), n2(ctx);
        ForcingValue v1 = eval(ctx, p, x, env_of(n1));
        ForcingValue v2 = eval(ctx, p, x, env_of(n2));
        auto ret = [](const Context&, const StrongPtr& sv) { return unit(sv); };
        laws = laws && alpha_eq(run(bind(ret, v1), x, ctx), run(v2, x, ctx));
      }
      {  // associativity
        NameSupply n1(ctx), n2(ctx);
        ForcingValue v1 = eval(ctx, p, x, env_of(n1));
        ForcingValue v2 = eval(ctx, p, x, env_of(n2));
        auto f1 = wrap_h(n1), g1 = wrap_h(n1);
        auto f2 = wrap_h(n2), g2 = wrap_h(n2);
        TermPtr lhs = run(bind(g1, bind(f1, v1)), x, ctx);
        TermPtr rhs = run(bind([&](const Context& w, const StrongPtr& sv) {
                            return bind(g2, f2(w, sv));
                          },
                          v2),
                      x, ctx);
        laws = laws && alpha_eq(lhs, rhs);
      }
      if (laws) ++ok;
    } catch (const std::exception& e) {
      if (first_failure.empty())
        first_failure = "case " + std::to_string(i) + ": " + e.what();
    }
  }
  std::string d = std::to_string(ok) + "/" + std::to_string(n);
  if (!first_failure.empty()) d += "; " + first_failure;
  report(7, "monad laws observed through run at atoms", ok == n, d);
}

void criterion_8() {
  int n = 500, ok = 0;
  std::string first_failure;
  for (int i = 0; i < n; ++i) {
    try {
      Problem prob = gen_problem(5 + i % 20,
                                 g_base_seed * 600000 + static_cast<unsigned>(i));
      TermPtr p = inject_redexes(prob.term, 1 + i % 4,
                                 g_base_seed * 700000 + static_cast<unsigned>(i));
      bool good = checks(prob.ctx, p, prob.goal);
      TermPtr cur = p;
      int guard = 0;
      while (auto next = step(cur)) {
        cur = *next;
        good = good && checks(prob.ctx, cur, prob.goal);
        if (++guard > 2000) {
          good = false;
          break;
        }
      }
      good = good && !has_redex(cur);
      good = good && alpha_eq(beta_nf(p), beta_nf_innermost(p));
      if (good) ++ok;
    } catch (const std::exception& e) {
      if (first_failure.empty())
        first_failure = "case " + std::to_string(i) + ": " + e.what();
    }
  }
  std::string d = std::to_string(ok) + "/" + std::to_string(n);
  if (!first_failure.empty()) d += "; " + first_failure;
  report(8, "oracle self-check: subject reduction and strategy independence",
         ok == n, d);
}

void criterion_9() {
  Context ctx;
  for (int i = 0; i < 10; ++i)
    ctx = ctx.with_hypothesis("c" + std::to_string(i),
                              parse_formula("X \\/ Y"));
  FormulaPtr goal = parse_formula("X \\/ Y");
  TermPtr t = var("c0");
  for (int i = 0; i < 10; ++i)
    t = kase(var("c" + std::to_string(i)), "l" + std::to_string(i), t,
             "r" + std::to_string(i), t);
  bool ok = false;
  double secs = 0;
  std::string detail;
  try {
    Clock::time_point t0 = Clock::now();
    TermPtr nf = normalize(ctx, t, goal);
    secs = seconds_since(t0);
    ok = secs < 5.0 && is_normal(nf) && checks(ctx, nf, goal);
    std::ostringstream d;
    d << secs << "s, output " << node_count(nf) << " nodes";
    detail = d.str();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(9, "depth-10 case tree normalizes under 5s", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_base_seed = std::strtoull(argv[1], nullptr, 10);
  criteria_1_to_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures) {
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
