#pragma once

#include <functional>
#include <memory>
#include <stdexcept>

#include "mqc/ast.hpp"

// The IK-CPS forcing domain over the universal model whose worlds are
// typing contexts. A ForcingValue is a computation: given a future world
// and a continuation consuming a strong-forcing value, it produces a
// normal proof term. The answer formula is erased at runtime; final
// results are independently re-typechecked instead.

namespace mqc {

struct StrongValue;
using StrongPtr = std::shared_ptr<const StrongValue>;

using Continuation = std::function<TermPtr(const Context&, const StrongPtr&)>;

class ForcingValue {
 public:
  using Fn = std::function<TermPtr(const Context&, const Continuation&)>;

  ForcingValue() = default;
  explicit ForcingValue(Fn fn) : fn_(std::move(fn)) {}

  TermPtr operator()(const Context& world, const Continuation& k) const {
    return fn_(world, k);
  }

  bool valid() const { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
};

// Formula-directed semantic value: a normal derivation at atoms, a
// structural value at composite formulas.
struct StrongValue {
  struct Atom {
    TermPtr term;  // normal (in fact neutral) derivation of the atom
  };
  struct Pair {
    ForcingValue left, right;
  };
  struct Left {
    ForcingValue value;
  };
  struct Right {
    ForcingValue value;
  };
  struct Fun {
    std::function<ForcingValue(const Context&, const ForcingValue&)> apply;
  };
  struct All {
    std::function<ForcingValue(const Context&, const Individual&)> instantiate;
  };
  struct Wit {
    Individual witness;
    ForcingValue value;
  };

  using Node = std::variant<Atom, Pair, Left, Right, Fun, All, Wit>;
  Node node;
};

StrongPtr strong(StrongValue::Node node);

struct FormulaNotAtomic : std::runtime_error {
  explicit FormulaNotAtomic(const std::string& what)
      : std::runtime_error(what) {}
};

// Monadic unit: the computation that immediately feeds sv to its
// continuation at the ambient world.
ForcingValue unit(StrongPtr sv);

// Monadic bind: runs v, feeds each delivered strong value through f, and
// threads the outer continuation.
ForcingValue bind(std::function<ForcingValue(const Context&, const StrongPtr&)> f,
                  ForcingValue v);

// Monadic run, defined at atomic formulas only: invokes v with the
// continuation that projects the atom's derivation.
TermPtr run(const ForcingValue& v, const FormulaPtr& formula,
            const Context& world);

// Debug validation switch: when on, run() re-typechecks the term it
// produces at its world and formula.
void set_debug_validation(bool on);
bool debug_validation();

// Shallow shape check: the variant of sv matches the formula it is
// indexed by; atom payloads are normal.
bool strong_value_matches(const StrongValue& sv, const FormulaPtr& formula);

}  // namespace mqc
