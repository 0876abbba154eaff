#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

// Core syntax for minimal intuitionistic predicate logic (MQC):
// individuals, first-order formulas, and natural-deduction proof terms,
// together with contexts (worlds of the universal model) and the fresh
// name machinery used by the normalizer.

namespace mqc {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Individuals

struct Individual {
  enum class Kind { Variable, Constant };
  Kind kind = Kind::Variable;
  std::string name;

  friend bool operator==(const Individual&, const Individual&) = default;
  friend auto operator<=>(const Individual&, const Individual&) = default;
};

Individual ivar(std::string name);
Individual iconst(std::string name);

// ---------------------------------------------------------------------------
// Formulas

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  struct Atom {
    std::string name;
    std::vector<Individual> args;
  };
  struct And {
    FormulaPtr left, right;
  };
  struct Or {
    FormulaPtr left, right;
  };
  struct Imp {
    FormulaPtr hyp, concl;
  };
  struct Forall {
    std::string var;
    FormulaPtr body;
  };
  struct Exists {
    std::string var;
    FormulaPtr body;
  };

  using Node = std::variant<Atom, And, Or, Imp, Forall, Exists>;
  Node node;
};

FormulaPtr atom(std::string name, std::vector<Individual> args = {});
FormulaPtr conj(FormulaPtr left, FormulaPtr right);
FormulaPtr disj(FormulaPtr left, FormulaPtr right);
FormulaPtr imp(FormulaPtr hyp, FormulaPtr concl);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);

bool is_atomic(const FormulaPtr& f);

// Free individual variables of a formula.
std::set<std::string> free_ind_vars(const FormulaPtr& f);

// Capture-avoiding substitution of individual t for variable x.
FormulaPtr subst_ind_formula(const FormulaPtr& f, const std::string& x,
                             const Individual& t);

// Equality up to consistent renaming of quantifier-bound variables.
bool alpha_eq_formula(const FormulaPtr& a, const FormulaPtr& b);

// ---------------------------------------------------------------------------
// Proof terms

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  struct Var {
    std::string name;
  };
  struct Lam {
    std::string var;
    TermPtr body;
  };
  struct App {
    TermPtr fn, arg;
  };
  struct Pair {
    TermPtr first, second;
  };
  struct Proj {
    int index;  // 1 or 2
    TermPtr arg;
  };
  struct Inj {
    int index;  // 1 or 2
    TermPtr arg;
  };
  struct Case {
    TermPtr scrutinee;
    std::string left_var;
    TermPtr left_body;
    std::string right_var;
    TermPtr right_body;
  };
  struct Gen {
    std::string var;  // individual variable
    TermPtr body;
  };
  struct IApp {
    TermPtr fn;
    Individual arg;
  };
  struct Wit {
    Individual witness;
    TermPtr body;
  };
  struct Dest {
    TermPtr scrutinee;
    std::string ind_var;
    std::string proof_var;
    TermPtr body;
  };

  using Node = std::variant<Var, Lam, App, Pair, Proj, Inj, Case, Gen, IApp,
                            Wit, Dest>;
  Node node;
};

TermPtr var(std::string name);
TermPtr lam(std::string v, TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr pair(TermPtr first, TermPtr second);
TermPtr proj(int index, TermPtr arg);
TermPtr inj(int index, TermPtr arg);
TermPtr kase(TermPtr scrutinee, std::string lv, TermPtr lb, std::string rv,
             TermPtr rb);
TermPtr gen(std::string v, TermPtr body);
TermPtr iapp(TermPtr fn, Individual arg);
TermPtr wit(Individual witness, TermPtr body);
TermPtr dest(TermPtr scrutinee, std::string iv, std::string pv, TermPtr body);

std::set<std::string> free_proof_vars(const TermPtr& p);
std::set<std::string> free_ind_vars(const TermPtr& p);
std::size_t node_count(const TermPtr& p);

// Capture-avoiding substitution of proof term q for proof variable a.
TermPtr subst_proof(const TermPtr& p, const std::string& a, const TermPtr& q);

// Capture-avoiding substitution of individual t for individual variable x.
TermPtr subst_ind_term(const TermPtr& p, const std::string& x,
                       const Individual& t);

// Equality up to consistent renaming of bound proof and individual variables.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

// Picks base, base0, base1, ... -- first candidate not in avoid.
std::string avoid_name(const std::string& base,
                       const std::set<std::string>& avoid);

// ---------------------------------------------------------------------------
// Contexts (worlds of the universal model)

struct Context {
  std::vector<std::pair<std::string, FormulaPtr>> hypotheses;
  std::set<std::string> ind_vars;
  std::set<std::string> constants;

  std::optional<FormulaPtr> lookup_hypothesis(const std::string& name) const;
  bool has_hypothesis(const std::string& name) const;
  bool has_individual(const Individual& t) const;

  Context with_hypothesis(std::string name, FormulaPtr formula) const;
  Context with_ind_var(std::string name) const;
  Context with_constant(std::string name) const;

  // World order: this >= base iff base's hypotheses are a prefix of ours
  // and base's individuals are a subset.
  bool extends(const Context& base) const;

  // All individuals in scope, constants first.
  std::vector<Individual> individuals() const;

  // Every name occurring in the context (for fresh-name reservation).
  std::set<std::string> all_names() const;
};

// Deterministic job-local supply of names a0, a1, ... / x0, x1, ...
// A single counter is shared between the two prefixes; names already
// present in the governing context are skipped.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(const Context& ctx);

  void reserve(const std::string& name);
  std::string fresh_proof_var();
  std::string fresh_ind_var();

 private:
  std::string fresh(const char* prefix);

  int counter_ = 0;
  std::set<std::string> reserved_;
};

}  // namespace mqc
