#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bicyclic/trig_poly.hpp"
#include "report.hpp"

namespace bicyclic::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string command;
  int k = 2;
  int n = 12;
  int cap = 3;
  int j = 1;
  std::vector<int> ns;
  double tol = 0.01;
  int grid = 0;
  std::uint64_t seed = 1;
  int trials = 200;
  double arc = 1.40;
  double lambda = 1.01;
  std::string suite = "all";
  std::string layout = "equal";
  bool random_poly = false;
  int threads = 1;
  long long budget = 2'000'000;
  bool timing = false;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  std::optional<std::string> plot_path;
  std::optional<std::string> fixtures;
};

/// Each command fills a report; the exit code is kExitPass iff every claim passes.
/// Invalid input throws std::invalid_argument, numerical breakdown NumericalError.
Report cmd_census(const RunConfig& cfg);
Report cmd_psi(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_bounds(const RunConfig& cfg);
Report cmd_deform_demo(const RunConfig& cfg);

/// Dispatches on cfg.command, writes the requested outputs, and maps errors to
/// exit codes. Prints the summary (or the error) to the given streams.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// verify suites, also usable on their own
void suite_smilansky(const RunConfig& cfg, Report& report);
void suite_deformation(const RunConfig& cfg, Report& report);
void suite_newton(const RunConfig& cfg, Report& report);
void suite_simplex(const RunConfig& cfg, Report& report);
void suite_nonflat(const RunConfig& cfg, Report& report);
void suite_b6(const RunConfig& cfg, Report& report);

/// Random cosine-only raked polynomial: real self-inversive image, nonzero
/// leading coefficient, no roots at +-1 almost surely.
RakedTrigPoly random_real_raked(int k, std::mt19937_64& rng);
/// Random raked polynomial with |top coefficient| bounded below.
RakedTrigPoly random_raked(int k, std::mt19937_64& rng);

}  // namespace bicyclic::cli
