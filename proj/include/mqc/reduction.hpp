#pragma once

#include <optional>
#include <stdexcept>

#include "mqc/ast.hpp"

// Small-step beta reduction, used as an independent oracle by the
// property suites. Deliberately shares no code with the evaluator.
// Beta only: no eta, no commuting conversions.

namespace mqc {

struct FuelExhausted : std::runtime_error {
  FuelExhausted()
      : std::runtime_error("reduction fuel exhausted (ill-typed input?)") {}
};

// Leftmost-outermost single step; nullopt when p has no redex.
std::optional<TermPtr> step(const TermPtr& p);

// Rightmost-innermost single step, for confluence spot-checks.
std::optional<TermPtr> step_innermost(const TermPtr& p);

bool has_redex(const TermPtr& p);

// Iterate step to a fixpoint, at most fuel steps.
TermPtr beta_nf(const TermPtr& p, long fuel = 100000);
TermPtr beta_nf_innermost(const TermPtr& p, long fuel = 100000);

// alpha_eq of the two beta normal forms.
bool beta_eq(const TermPtr& p, const TermPtr& q, long fuel = 100000);

}  // namespace mqc
