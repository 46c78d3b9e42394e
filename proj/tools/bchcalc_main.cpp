#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bchcalc/assoc.hpp"
#include "bchcalc/derive.hpp"
#include "bchcalc/parse.hpp"
#include "bchcalc/render.hpp"

namespace {

using namespace bchcalc;

int cmd_derive(int n, int limit, const std::string& fmt, bool symmetric) {
  BchResult result = derive_bch(n, limit);
  RenderMode mode = render_mode_from_string(fmt);
  if (symmetric)
    std::cout << format_symmetric(extract_symmetric_form(result), n, mode);
  else
    std::cout << format(result.exponent, mode) << "\n";
  return 0;
}

int cmd_verify(int n, int limit) {
  bool all_ok = true;
  for (int m = 1; m <= n; ++m) {
    BchResult result = derive_bch(m, limit);
    VerifyReport report = verify_theorem(m, result.exponent);
    std::cout << "n=" << m << ": " << (report.ok ? "ok" : "FAIL") << "\n";
    if (!report.ok) {
      all_ok = false;
      std::cerr << verify_report_json(report) << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

void print_step(const PhaseStep& step, const std::string& prefix, RenderMode mode) {
  std::cout << prefix << "correction: " << format(step.correction, mode) << "\n";
  std::cout << prefix << "residual: " << format(step.residual_increment, mode) << "\n";
}

int cmd_trace(int n, int limit, const std::string& phase, int step, const std::string& fmt) {
  RenderMode mode = render_mode_from_string(fmt);
  DerivationTrace trace = derive_bch(n, limit).trace;

  auto dump_phase = [&](const std::vector<PhaseStep>& steps, const std::string& name) {
    if (step > 0) {
      if (step > static_cast<int>(steps.size()))
        throw std::invalid_argument("trace: phase has only " + std::to_string(steps.size()) + " steps");
      print_step(steps[step - 1], "", mode);
    } else {
      for (size_t i = 0; i < steps.size(); ++i) print_step(steps[i], name + " step " + std::to_string(i + 1) + " ", mode);
    }
  };

  if (phase.empty() || phase == "right") dump_phase(trace.right_steps, "right");
  if (phase.empty() || phase == "left") dump_phase(trace.left_steps, "left");
  if (phase.empty() && step == 0) std::cout << "central: " << format(trace.final_central, mode) << "\n";
  return 0;
}

int cmd_normalize(int n, const std::string& expr, const std::string& fmt) {
  std::cout << format(parse_lie_expr(expr, n), render_mode_from_string(fmt)) << "\n";
  return 0;
}

int cmd_basis(int deg) {
  for (const auto& bw : lyndon_basis(deg))
    if (static_cast<int>(bw.word.size()) == deg)
      std::cout << bw.word << " " << bw.bracketing.bracket_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for products of exponentials with nilpotent coefficients"};
  app.require_subcommand(1);

  int n = 1, limit = bchcalc::kDefaultArityLimit, step = 0, deg = 1;
  std::string fmt = "text", phase, expr;
  bool symmetric = false;

  CLI::App* derive = app.add_subcommand("derive", "Compute the exponent Z_n");
  derive->add_option("--n", n, "arity")->required()->check(CLI::PositiveNumber);
  derive->add_option("--limit", limit, "arity cap");
  derive->add_option("--format", fmt, "text|latex|json");
  derive->add_flag("--symmetric", symmetric, "print the (d1+...+dn)^k blocks");

  CLI::App* verify = app.add_subcommand("verify", "Check exp(sX).exp(sY) = exp(Z_m) for m = 1..n");
  verify->add_option("--n", n, "arity")->required()->check(CLI::PositiveNumber);
  verify->add_option("--limit", limit, "arity cap");

  CLI::App* trace = app.add_subcommand("trace", "Print the per-step absorption quantities");
  trace->add_option("--n", n, "arity")->required()->check(CLI::PositiveNumber);
  trace->add_option("--limit", limit, "arity cap");
  trace->add_option("--phase", phase, "right|left")->check(CLI::IsMember({"right", "left"}));
  trace->add_option("--step", step, "1-based step inside the phase")->check(CLI::PositiveNumber);
  trace->add_option("--format", fmt, "text|latex|json");

  CLI::App* normalize = app.add_subcommand("normalize", "Parse an expression and print its canonical form");
  normalize->add_option("--n", n, "arity")->required()->check(CLI::PositiveNumber);
  normalize->add_option("--expr", expr, "expression")->required();
  normalize->add_option("--format", fmt, "text|latex|json");

  CLI::App* basis = app.add_subcommand("basis", "List the Lyndon basis words of one degree");
  basis->add_option("--deg", deg, "degree")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (*derive) return cmd_derive(n, limit, fmt, symmetric);
    if (*verify) return cmd_verify(n, limit);
    if (*trace) {
      if (step > 0 && phase.empty()) throw CLI::ValidationError("--step requires --phase");
      return cmd_trace(n, limit, phase, step, fmt);
    }
    if (*normalize) return cmd_normalize(n, expr, fmt);
    if (*basis) return cmd_basis(deg);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
