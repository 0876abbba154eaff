#include "mqc/semantics.hpp"

#include <atomic>

#include "mqc/print.hpp"
#include "mqc/typecheck.hpp"

namespace mqc {

StrongPtr strong(StrongValue::Node node) {
  return std::make_shared<const StrongValue>(StrongValue{std::move(node)});
}

static std::atomic<bool> g_debug_validation{false};

void set_debug_validation(bool on) { g_debug_validation = on; }
bool debug_validation() { return g_debug_validation; }

ForcingValue unit(StrongPtr sv) {
  return ForcingValue([sv = std::move(sv)](const Context& world,
                                           const Continuation& k) {
    return k(world, sv);
  });
}

ForcingValue bind(std::function<ForcingValue(const Context&, const StrongPtr&)> f,
                  ForcingValue v) {
  return ForcingValue([f = std::move(f), v = std::move(v)](
                          const Context& world, const Continuation& k) {
    return v(world, [f, k](const Context& world2, const StrongPtr& sv) {
      return f(world2, sv)(world2, k);
    });
  });
}

TermPtr run(const ForcingValue& v, const FormulaPtr& formula,
            const Context& world) {
  if (!is_atomic(formula))
    throw FormulaNotAtomic("run at non-atomic formula " +
                           print_formula(formula));
  TermPtr result = v(world, [](const Context&, const StrongPtr& sv) {
    return std::get<StrongValue::Atom>(sv->node).term;
  });
  if (debug_validation()) check(world, result, formula);
  return result;
}

bool strong_value_matches(const StrongValue& sv, const FormulaPtr& formula) {
  return std::visit(
      overloaded{
          [&](const StrongValue::Atom& a) {
            return is_atomic(formula) && is_normal(a.term);
          },
          [&](const StrongValue::Pair&) {
            return std::holds_alternative<Formula::And>(formula->node);
          },
          [&](const StrongValue::Left&) {
            return std::holds_alternative<Formula::Or>(formula->node);
          },
          [&](const StrongValue::Right&) {
            return std::holds_alternative<Formula::Or>(formula->node);
          },
          [&](const StrongValue::Fun&) {
            return std::holds_alternative<Formula::Imp>(formula->node);
          },
          [&](const StrongValue::All&) {
            return std::holds_alternative<Formula::Forall>(formula->node);
          },
          [&](const StrongValue::Wit&) {
            return std::holds_alternative<Formula::Exists>(formula->node);
          },
      },
      sv.node);
}

}  // namespace mqc
