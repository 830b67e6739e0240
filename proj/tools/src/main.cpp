#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

namespace {

using bicyclic::cli::RunConfig;

void common_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "curve parameter (B_2k)")->check(CLI::Range(1, 16));
  sub->add_option("--n", cfg.n, "number of points (even)")->check(CLI::PositiveNumber);
  sub->add_option("--tol", cfg.tol, "interval tolerance");
  sub->add_option("--grid", cfg.grid, "sign-check grid size (0: automatic)")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--json", cfg.json_path, "write the JSON report here");
  sub->add_option("--csv", cfg.csv_path, "write CSV rows here");
  sub->add_option("--plot", cfg.plot_path, "write two-column plot data here");
  sub->add_option("--fixtures", cfg.fixtures, "hull fixture directory (default: $BICYCLIC_FIXTURES)");
  sub->add_flag("--timing", cfg.timing, "record elapsed time in the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faces of bicyclic polytopes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* census = app.add_subcommand("census", "enumerate faces of B_2k(X_n)");
  common_flags(census, cfg);
  census->add_option("--cap", cfg.cap, "largest face dimension to enumerate + 1")->check(CLI::PositiveNumber);
  census->add_option("--layout", cfg.layout, "point layout")->check(CLI::IsMember({"equal", "random"}));
  census->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  census->add_option("--budget", cfg.budget, "maximum LP calls")->check(CLI::PositiveNumber);

  auto* psi = app.add_subcommand("psi", "bracket the face threshold psi_k");
  common_flags(psi, cfg);

  auto* verify = app.add_subcommand("verify", "run the numerical claim suites");
  common_flags(verify, cfg);
  verify->add_option("--suite", cfg.suite, "suite to run")
      ->check(CLI::IsMember({"all", "smilansky", "deformation", "newton", "simplex", "nonflat", "b6"}));
  verify->add_option("--trials", cfg.trials, "random trials per suite")->check(CLI::PositiveNumber);
  verify->add_option("--arc", cfg.arc, "arc length for random triples");

  auto* bounds = app.add_subcommand("bounds", "face-number bounds");
  common_flags(bounds, cfg);
  bounds->add_option("--j", cfg.j, "face dimension")->check(CLI::NonNegativeNumber);
  bounds->add_option("--ns", cfg.ns, "point counts for the sandwich report");
  bounds->add_option("--cap", cfg.cap, "census cap for sandwich rows")->check(CLI::PositiveNumber);

  auto* deform = app.add_subcommand("deform-demo", "deform a root multiset and check rakedness");
  common_flags(deform, cfg);
  deform->add_option("--lambda", cfg.lambda, "deformation parameter");
  deform->add_flag("--random", cfg.random_poly, "use a random raked polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bicyclic::cli::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return bicyclic::cli::run(cfg, std::cout, std::cerr);
}
