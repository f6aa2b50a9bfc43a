#include "sek3/tools/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace sek3::tools;
  CLI::App app{"SE_K(3) tools: dead reckoning, point registration, identity checks"};
  app.require_subcommand(1);

  DeadReckonOptions dr;
  auto* deadreckon = app.add_subcommand("deadreckon", "integrate a velocity log to a CSV trajectory");
  deadreckon->add_option("input", dr.input, "velocity log (JSON lines)")->required();
  deadreckon->add_option("--k", dr.k, "number of translation slots")->required();
  deadreckon->add_option("--dt", dr.dt, "maximum integration substep in seconds");
  deadreckon->add_option("--output", dr.output, "CSV path (stdout when omitted)");
  deadreckon->add_option("--initial", dr.initial, "GroupElement JSON for the state at t = 0");

  RegisterOptions rg;
  auto* reg = app.add_subcommand("register", "Gauss-Newton point registration");
  reg->add_option("points", rg.points, "point blocks (JSON lines)")->required();
  reg->add_option("observations", rg.observations, "observations (JSON lines)")->required();
  reg->add_option("--k", rg.k, "points per block")->required();
  reg->add_option("--max-iters", rg.max_iters, "iteration limit");
  reg->add_option("--tol", rg.tol, "step-norm tolerance");
  reg->add_option("--initial", rg.initial, "GroupElement JSON initial guess");

  VerifyOptions vf;
  auto* verify = app.add_subcommand("verify", "run the identity suite at a chosen K");
  verify->add_option("--k", vf.k, "number of translation slots")->required();
  verify->add_option("--trials", vf.trials, "random trials per identity");
  verify->add_option("--seed", vf.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageOrParse;
  }

  if (*deadreckon) return cmd_deadreckon(dr, std::cout, std::cerr);
  if (*reg) return cmd_register(rg, std::cout, std::cerr);
  return cmd_verify(vf, std::cout, std::cerr);
}
