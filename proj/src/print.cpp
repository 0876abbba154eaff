#include "mqc/print.hpp"

#include <sstream>

namespace mqc {

std::string print_individual(const Individual& t) { return t.name; }

// Precedence: quantifiers scope to the end (0), -> (1, right), \/ (2, right),
// /\ (3, right), atoms (4).
static void pf(std::ostringstream& out, const FormulaPtr& f, int min_prec) {
  std::visit(
      overloaded{
          [&](const Formula::Atom& a) {
            out << a.name;
            if (!a.args.empty()) {
              out << "(";
              for (std::size_t i = 0; i < a.args.size(); ++i) {
                if (i) out << ",";
                out << a.args[i].name;
              }
              out << ")";
            }
          },
          [&](const Formula::And& n) {
            bool paren = min_prec > 3;
            if (paren) out << "(";
            pf(out, n.left, 4);
            out << " /\\ ";
            pf(out, n.right, 3);
            if (paren) out << ")";
          },
          [&](const Formula::Or& n) {
            bool paren = min_prec > 2;
            if (paren) out << "(";
            pf(out, n.left, 3);
            out << " \\/ ";
            pf(out, n.right, 2);
            if (paren) out << ")";
          },
          [&](const Formula::Imp& n) {
            bool paren = min_prec > 1;
            if (paren) out << "(";
            pf(out, n.hyp, 2);
            out << " -> ";
            pf(out, n.concl, 1);
            if (paren) out << ")";
          },
          [&](const Formula::Forall& n) {
            bool paren = min_prec > 0;
            if (paren) out << "(";
            out << "forall " << n.var << ". ";
            pf(out, n.body, 0);
            if (paren) out << ")";
          },
          [&](const Formula::Exists& n) {
            bool paren = min_prec > 0;
            if (paren) out << "(";
            out << "exists " << n.var << ". ";
            pf(out, n.body, 0);
            if (paren) out << ")";
          },
      },
      f->node);
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream out;
  pf(out, f, 0);
  return out.str();
}

// Term levels: fun/gen/case/dest (0), application (1), fst/snd/inl/inr (2),
// variables and delimited forms (3).
static void pt(std::ostringstream& out, const TermPtr& p, int min_prec) {
  std::visit(
      overloaded{
          [&](const Term::Var& n) { out << n.name; },
          [&](const Term::Lam& n) {
            bool paren = min_prec > 0;
            if (paren) out << "(";
            out << "fun " << n.var << " => ";
            pt(out, n.body, 0);
            if (paren) out << ")";
          },
          [&](const Term::App& n) {
            bool paren = min_prec > 1;
            if (paren) out << "(";
            pt(out, n.fn, 1);
            out << " ";
            pt(out, n.arg, 2);
            if (paren) out << ")";
          },
          [&](const Term::Pair& n) {
            out << "(";
            pt(out, n.first, 0);
            out << ", ";
            pt(out, n.second, 0);
            out << ")";
          },
          [&](const Term::Proj& n) {
            bool paren = min_prec > 2;
            if (paren) out << "(";
            out << (n.index == 1 ? "fst " : "snd ");
            pt(out, n.arg, 3);
            if (paren) out << ")";
          },
          [&](const Term::Inj& n) {
            bool paren = min_prec > 2;
            if (paren) out << "(";
            out << (n.index == 1 ? "inl " : "inr ");
            pt(out, n.arg, 3);
            if (paren) out << ")";
          },
          [&](const Term::Case& n) {
            bool paren = min_prec > 0;
            if (paren) out << "(";
            out << "case ";
            pt(out, n.scrutinee, 0);
            out << " of inl " << n.left_var << " => ";
            pt(out, n.left_body, 0);
            out << " | inr " << n.right_var << " => ";
            pt(out, n.right_body, 0);
            if (paren) out << ")";
          },
          [&](const Term::Gen& n) {
            bool paren = min_prec > 0;
            if (paren) out << "(";
            out << "gen " << n.var << " => ";
            pt(out, n.body, 0);
            if (paren) out << ")";
          },
          [&](const Term::IApp& n) {
            bool paren = min_prec > 1;
            if (paren) out << "(";
            pt(out, n.fn, 1);
            out << " [" << n.arg.name << "]";
            if (paren) out << ")";
          },
          [&](const Term::Wit& n) {
            out << "[" << n.witness.name << ", ";
            pt(out, n.body, 0);
            out << "]";
          },
          [&](const Term::Dest& n) {
            bool paren = min_prec > 0;
            if (paren) out << "(";
            out << "dest ";
            pt(out, n.scrutinee, 0);
            out << " as [" << n.ind_var << ", " << n.proof_var << "] in ";
            pt(out, n.body, 0);
            if (paren) out << ")";
          },
      },
      p->node);
}

std::string print_term(const TermPtr& p) {
  std::ostringstream out;
  pt(out, p, 0);
  return out.str();
}

std::string print_context(const Context& ctx) {
  std::ostringstream out;
  for (const auto& c : ctx.constants) out << "const " << c << ".\n";
  for (const auto& v : ctx.ind_vars) out << "var " << v << ".\n";
  for (const auto& [n, f] : ctx.hypotheses)
    out << n << " : " << print_formula(f) << ".\n";
  return out.str();
}

}  // namespace mqc
