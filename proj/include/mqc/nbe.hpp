#pragma once

#include <map>
#include <stdexcept>

#include "mqc/ast.hpp"
#include "mqc/semantics.hpp"

// Normalization by evaluation: evaluate a proof term into the forcing
// domain (soundness), then extract a normal form by type-directed
// reification (completeness). Call-by-name is the default; the
// call-by-value variant works for closed terms only.

namespace mqc {

enum class Strategy { CallByName, CallByValue };

struct UnboundInEnv : std::runtime_error {
  explicit UnboundInEnv(const std::string& name)
      : std::runtime_error("unbound in environment: " + name) {}
};

struct NotNeutral : std::runtime_error {
  explicit NotNeutral(const std::string& what) : std::runtime_error(what) {}
};

struct CbvOpenTerm : std::runtime_error {
  CbvOpenTerm()
      : std::runtime_error(
            "call-by-value normalization works for closed terms only") {}
};

// Proof variables map to forcing computations, individual variables to
// the individuals substituted for them.
struct Env {
  std::map<std::string, ForcingValue> proofs;
  std::map<std::string, Individual> individuals;

  const ForcingValue& proof(const std::string& name) const;
  Individual resolve(const Individual& t) const;
  Env with_proof(const std::string& name, ForcingValue v) const;
  Env with_individual(const std::string& name, Individual t) const;
};

// Evaluation into the forcing domain. The context and formula are the
// typing precondition; evaluation itself is type-free.
ForcingValue eval(const Context& ctx, const TermPtr& p, const FormulaPtr& goal,
                  const Env& env, Strategy strategy = Strategy::CallByName);

// Type-directed extraction of a normal term from a forcing value.
TermPtr reify(const Context& world, const FormulaPtr& formula,
              const ForcingValue& v, NameSupply& names);

// Embedding of a neutral term into the forcing domain.
ForcingValue reflect(const Context& world, const FormulaPtr& formula,
                     const TermPtr& neutral, NameSupply& names);

// check, eval, reify. Output is deterministic given the job name supply
// and is re-typechecked at the goal before being returned.
TermPtr normalize(const Context& ctx, const TermPtr& p, const FormulaPtr& goal,
                  Strategy strategy = Strategy::CallByName);

}  // namespace mqc
