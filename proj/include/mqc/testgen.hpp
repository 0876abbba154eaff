#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "mqc/ast.hpp"

// Deterministic, seedable generator of well-typed proof terms and
// redex-enriched variants. Goal-directed weighted search: introductions
// follow the goal's shape, eliminations walk hypothesis spines, with
// eliminations favored 2:1 at composite hypotheses so the disjunction
// and existential paths get exercised.

namespace mqc {

struct GenerationFailed : std::runtime_error {
  explicit GenerationFailed(const std::string& what)
      : std::runtime_error(what) {}
};

// A term with check(ctx, result, goal) = ok, deterministic for a fixed
// seed; size is the node budget of the search.
TermPtr gen_term(const Context& ctx, const FormulaPtr& goal, int size,
                 std::uint64_t seed);

// Wraps n random subterms in identity beta-expansions
// (q becomes (fun a => a) q); typing and beta-equality are preserved.
TermPtr inject_redexes(const TermPtr& p, int n, std::uint64_t seed);

// Random well-scoped formula over the individuals in scope.
FormulaPtr gen_formula(std::mt19937_64& rng, int depth,
                       const std::vector<Individual>& inds, bool quantifiers);

// A self-contained generated problem: a context, a goal provable in it,
// and a term witnessing that.
struct Problem {
  Context ctx;
  FormulaPtr goal;
  TermPtr term;
};

struct GenOptions {
  bool quantifiers = true;  // admit forall/exists in formulas
  bool closed = false;      // empty hypothesis list (for CBV runs)
};

// Repeatedly draws goals until gen_term succeeds; deterministic for a
// fixed seed. Throws GenerationFailed only if every attempt fails.
Problem gen_problem(int size, std::uint64_t seed, const GenOptions& opts = {});

}  // namespace mqc
