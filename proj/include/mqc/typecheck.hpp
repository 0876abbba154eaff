#pragma once

#include <stdexcept>
#include <string>

#include "mqc/ast.hpp"

namespace mqc {

struct TypeError : std::runtime_error {
  enum class Kind {
    UnboundVariable,
    ShapeMismatch,
    BranchMismatch,
    ScopeError,
    NotInferable,
  };

  TypeError(Kind kind, std::string message, TermPtr subterm = nullptr,
            FormulaPtr expected = nullptr, FormulaPtr actual = nullptr);

  Kind kind;
  TermPtr subterm;
  FormulaPtr expected;
  FormulaPtr actual;
};

// Bidirectional discipline: introduction forms check against a goal,
// eliminations infer. Beta-redexes are typed through their contractum
// (discarded subterms are still scope-checked), so unannotated redexes
// such as `(fun a => a) q` are accepted.

// Infers the unique formula of a term in the neutral grammar.
FormulaPtr infer_neutral(const Context& ctx, const TermPtr& e);

// Inference for any elimination-headed or redex-headed term.
FormulaPtr infer(const Context& ctx, const TermPtr& e);

// Succeeds (returns) iff ctx |- p : goal is derivable; throws TypeError.
void check(const Context& ctx, const TermPtr& p, const FormulaPtr& goal);

bool checks(const Context& ctx, const TermPtr& p, const FormulaPtr& goal);

// Membership in the normal / neutral subgrammars.
bool is_normal(const TermPtr& p);
bool is_neutral(const TermPtr& p);

// Formula well-scopedness over the context's individuals.
bool well_scoped(const Context& ctx, const FormulaPtr& f);

}  // namespace mqc
