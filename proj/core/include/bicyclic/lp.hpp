#pragma once

#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace bicyclic {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { less_equal, greater_equal, equal };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

/// maximize <objective, x> subject to the constraint rows and per-variable
/// bounds. Variables are free unless bounded with set_bounds.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  double lower(int i) const { return lower_[i]; }
  double upper(int i) const { return upper_[i]; }

  void set_objective(std::vector<double> c);
  void add_constraint(std::vector<double> coeffs, Relation rel, double rhs);
  void set_bounds(int var, double lo, double hi);

  /// Largest violation of rows and bounds at x.
  double max_violation(std::span<const double> x) const;

 private:
  int num_vars_;
  std::vector<double> objective_;
  std::vector<Constraint> constraints_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

enum class LpStatus { optimal, infeasible, unbounded, stalled };

std::string_view to_string(LpStatus s);

struct LpOptions {
  double pivot_tol = 1e-9;
  double optimality_tol = 1e-10;
  double feasibility_tol = 1e-9;
  /// Optimal points whose residual exceeds this (relative to max(1, |x|_inf))
  /// come back as stalled.
  double residual_tol = 1e-7;
  /// Switch from Dantzig pricing to Bland's rule after this many pivots.
  int bland_after = 5000;
  int max_pivots = 50000;
};

struct LpResult {
  LpStatus status = LpStatus::stalled;
  std::vector<double> x;
  double value = 0.0;
  double max_residual = 0.0;
  int pivots = 0;
};

/// Dense two-phase tableau simplex.
LpResult lp_solve(const LinearProgram& lp, const LpOptions& opts = {});

}  // namespace bicyclic
