#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqc/ast.hpp"

namespace mqc {

struct ParseError : std::runtime_error {
  ParseError(int line, int column, std::string what,
             std::vector<std::string> expected = {});

  int line;
  int column;
  std::vector<std::string> expected;
};

// Lowercase identifiers in the constants set parse as individual constants;
// everything else lowercase is an individual variable. Shadowed quantifier
// binders are freshened during parsing.
FormulaPtr parse_formula(const std::string& text,
                         const std::set<std::string>& constants = {});

TermPtr parse_term(const std::string& text,
                   const std::set<std::string>& constants = {});

// Context files: one declaration per line, `const c.`, `var x.`,
// `a : <formula>.`; `#` starts a comment.
Context parse_context(const std::string& text);

// Throws ParseError if atom arities are inconsistent across the context's
// hypotheses and the given extra formulas.
void check_atom_arities(const Context& ctx,
                        const std::vector<FormulaPtr>& extra = {});

}  // namespace mqc
