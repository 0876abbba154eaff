#pragma once

#include <string>

#include "mqc/ast.hpp"

namespace mqc {

// Concrete ASCII syntax, inverse of the parser: parse(print(v)) is
// alpha-equal to v.

std::string print_individual(const Individual& t);
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& p);
std::string print_context(const Context& ctx);

}  // namespace mqc
