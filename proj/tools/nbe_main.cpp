#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mqc/nbe.hpp"
#include "mqc/parse.hpp"
#include "mqc/print.hpp"
#include "mqc/reduction.hpp"
#include "mqc/typecheck.hpp"

namespace {

// Exit-code contract: 0 ok, 1 type error (or inequality for `equal`),
// 2 parse error, 3 call-by-value on an open term, 4 fuel exhausted.
constexpr int kOk = 0;
constexpr int kTypeError = 1;
constexpr int kParseError = 2;
constexpr int kStrategyError = 3;
constexpr int kFuelError = 4;

// --context accepts either a file path or inline declarations.
mqc::Context load_context(const std::string& spec) {
  if (spec.empty()) return {};
  std::string text = spec;
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return mqc::parse_context(text);
}

struct Job {
  mqc::Context ctx;
  mqc::TermPtr term;
  mqc::FormulaPtr goal;
};

Job load_job(const std::string& ctx_spec, const std::string& expr,
             const std::string& type) {
  Job job;
  job.ctx = load_context(ctx_spec);
  job.term = mqc::parse_term(expr, job.ctx.constants);
  job.goal = mqc::parse_formula(type, job.ctx.constants);
  mqc::check_atom_arities(job.ctx, {job.goal});
  return job;
}

int report_parse_error(const mqc::ParseError& e) {
  std::cerr << "parse error at " << e.line << ":" << e.column << ": "
            << e.what();
  if (!e.expected.empty()) {
    std::cerr << " (expected";
    for (const auto& t : e.expected) std::cerr << " " << t;
    std::cerr << ")";
  }
  std::cerr << "\n";
  return kParseError;
}

int report_type_error(const mqc::TypeError& e) {
  std::cerr << "type error: " << e.what();
  if (e.subterm) std::cerr << "\n  in: " << mqc::print_term(e.subterm);
  if (e.expected) std::cerr << "\n  expected: " << mqc::print_formula(e.expected);
  if (e.actual) std::cerr << "\n  actual:   " << mqc::print_formula(e.actual);
  std::cerr << "\n";
  return kTypeError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"proof-term checker and normalizer for minimal first-order logic"};
  cli.require_subcommand(1);

  std::string ctx_spec, expr, expr2, type, strategy = "cbn";
  long fuel = 100000;

  auto add_common = [&](CLI::App* cmd, bool need_type) {
    cmd->add_option("-c,--context", ctx_spec,
                    "context: file path or inline declarations");
    cmd->add_option("-e,--expr", expr, "proof term")->required();
    auto* t = cmd->add_option("-t,--type", type, "goal formula");
    if (need_type) t->required();
  };

  auto* cmd_check = cli.add_subcommand("check", "typecheck a term");
  add_common(cmd_check, true);

  auto* cmd_normalize =
      cli.add_subcommand("normalize", "normalize by evaluation");
  add_common(cmd_normalize, true);
  cmd_normalize->add_option("--strategy", strategy, "cbn or cbv")
      ->check(CLI::IsMember({"cbn", "cbv"}));

  auto* cmd_reduce =
      cli.add_subcommand("reduce", "beta-normalize by small-step reduction");
  add_common(cmd_reduce, true);
  cmd_reduce->add_option("--fuel", fuel, "maximum reduction steps");

  auto* cmd_equal = cli.add_subcommand(
      "equal", "compare two terms up to beta via normalization");
  add_common(cmd_equal, true);
  cmd_equal->add_option("-f,--expr2", expr2, "second proof term")->required();

  CLI11_PARSE(cli, argc, argv);

  try {
    if (cmd_check->parsed()) {
      Job job = load_job(ctx_spec, expr, type);
      mqc::check(job.ctx, job.term, job.goal);
      std::cout << "ok : " << mqc::print_formula(job.goal) << "\n";
      return kOk;
    }
    if (cmd_normalize->parsed()) {
      Job job = load_job(ctx_spec, expr, type);
      mqc::Strategy strat = strategy == "cbv" ? mqc::Strategy::CallByValue
                                              : mqc::Strategy::CallByName;
      std::cout << mqc::print_term(mqc::normalize(job.ctx, job.term, job.goal,
                                                  strat))
                << "\n";
      return kOk;
    }
    if (cmd_reduce->parsed()) {
      Job job = load_job(ctx_spec, expr, type);
      mqc::check(job.ctx, job.term, job.goal);
      std::cout << mqc::print_term(mqc::beta_nf(job.term, fuel)) << "\n";
      return kOk;
    }
    if (cmd_equal->parsed()) {
      Job job = load_job(ctx_spec, expr, type);
      mqc::TermPtr other = mqc::parse_term(expr2, job.ctx.constants);
      mqc::check(job.ctx, job.term, job.goal);
      mqc::check(job.ctx, other, job.goal);
      mqc::TermPtr n1 = mqc::normalize(job.ctx, job.term, job.goal);
      mqc::TermPtr n2 = mqc::normalize(job.ctx, other, job.goal);
      if (mqc::alpha_eq(n1, n2)) {
        std::cout << "equal\n";
        return kOk;
      }
      std::cout << "not equal\n";
      return kTypeError;
    }
  } catch (const mqc::ParseError& e) {
    return report_parse_error(e);
  } catch (const mqc::TypeError& e) {
    return report_type_error(e);
  } catch (const mqc::CbvOpenTerm& e) {
    std::cerr << e.what() << "\n";
    return kStrategyError;
  } catch (const mqc::FuelExhausted& e) {
    std::cerr << e.what() << "\n";
    return kFuelError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTypeError;
  }
  return kOk;
}
