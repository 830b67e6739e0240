#include "bicyclic/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bicyclic {

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars),
      objective_(static_cast<std::size_t>(num_vars), 0.0),
      lower_(static_cast<std::size_t>(num_vars), -kInf),
      upper_(static_cast<std::size_t>(num_vars), kInf) {
  if (num_vars < 1) throw std::invalid_argument("LinearProgram: need at least one variable");
}

void LinearProgram::set_objective(std::vector<double> c) {
  if (static_cast<int>(c.size()) != num_vars_) throw std::invalid_argument("LinearProgram: objective size mismatch");
  objective_ = std::move(c);
}

void LinearProgram::add_constraint(std::vector<double> coeffs, Relation rel, double rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars_) {
    throw std::invalid_argument("LinearProgram: constraint has " + std::to_string(coeffs.size()) +
                                " coefficients, expected " + std::to_string(num_vars_));
  }
  for (double v : coeffs) {
    if (!std::isfinite(v)) throw std::invalid_argument("LinearProgram: non-finite coefficient");
  }
  if (!std::isfinite(rhs)) throw std::invalid_argument("LinearProgram: non-finite right-hand side");
  constraints_.push_back({std::move(coeffs), rel, rhs});
}

void LinearProgram::set_bounds(int var, double lo, double hi) {
  if (var < 0 || var >= num_vars_) throw std::invalid_argument("LinearProgram: variable index out of range");
  if (lo > hi || std::isnan(lo) || std::isnan(hi)) throw std::invalid_argument("LinearProgram: empty bound interval");
  lower_[var] = lo;
  upper_[var] = hi;
}

double LinearProgram::max_violation(std::span<const double> x) const {
  double worst = 0.0;
  for (const auto& row : constraints_) {
    double lhs = 0.0;
    for (int i = 0; i < num_vars_; ++i) lhs += row.coeffs[i] * x[i];
    const double d = lhs - row.rhs;
    switch (row.relation) {
      case Relation::less_equal: worst = std::max(worst, d); break;
      case Relation::greater_equal: worst = std::max(worst, -d); break;
      case Relation::equal: worst = std::max(worst, std::abs(d)); break;
    }
  }
  for (int i = 0; i < num_vars_; ++i) {
    worst = std::max({worst, lower_[i] - x[i], x[i] - upper_[i]});
  }
  return worst;
}

std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::stalled: return "stalled";
  }
  return "unknown";
}

namespace {

// x_var = offset + sum over its columns of sign * column value, columns >= 0.
struct VarMap {
  double offset = 0.0;
  int pos_col = -1;
  int neg_col = -1;
};

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0) {}

  double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void pivot(int r, int c) {
    const double inv = 1.0 / at(r, c);
    double* prow = &at(r, 0);
    for (int j = 0; j <= cols_; ++j) prow[j] *= inv;
    prow[c] = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      double* row = &at(i, 0);
      const double f = row[c];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) row[j] -= f * prow[j];
      row[c] = 0.0;
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

constexpr double kNoiseCost = 1e-7;

class Simplex {
 public:
  Simplex(Tableau& t, std::vector<int>& basis, const LpOptions& opts, int& pivots)
      : t_(t), basis_(basis), opts_(opts), pivots_(pivots) {}

  // Minimizes the cost row in place. Columns flagged in `blocked` never enter.
  LpStatus run(const std::vector<bool>& blocked) {
    std::vector<bool> skip(blocked.size(), false);
    while (true) {
      if (pivots_ >= opts_.max_pivots) return LpStatus::stalled;
      const bool bland = pivots_ >= opts_.bland_after;
      int enter = -1;
      double best = -opts_.optimality_tol;
      for (int j = 0; j < t_.cols(); ++j) {
        if (blocked[j] || skip[j]) continue;
        const double d = t_.cost(j);
        if (d < best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter < 0) return LpStatus::optimal;
      int leave = -1;
      double ratio = 0.0;
      for (int i = 0; i < t_.rows(); ++i) {
        const double a = t_.at(i, enter);
        if (a <= opts_.pivot_tol) continue;
        const double r = std::max(t_.rhs(i), 0.0) / a;
        if (leave < 0 || r < ratio - 1e-12) {
          leave = i;
          ratio = r;
        } else if (r <= ratio + 1e-12) {
          // tie: Bland picks the smallest basic index, otherwise the larger pivot
          const bool take = bland ? basis_[i] < basis_[leave] : a > t_.at(leave, enter);
          if (take) {
            leave = i;
            ratio = std::min(ratio, r);
          }
        }
      }
      if (leave < 0) {
        // a barely negative reduced cost over a numerically empty column is rounding noise
        if (t_.cost(enter) > -kNoiseCost) {
          skip[enter] = true;
          continue;
        }
        return LpStatus::unbounded;
      }
      t_.pivot(leave, enter);
      basis_[leave] = enter;
      ++pivots_;
      std::fill(skip.begin(), skip.end(), false);
    }
  }

 private:
  Tableau& t_;
  std::vector<int>& basis_;
  const LpOptions& opts_;
  int& pivots_;
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp, const LpOptions& opts) {
  const int n = lp.num_vars();

  // structural columns
  std::vector<VarMap> vars(static_cast<std::size_t>(n));
  int cols = 0;
  struct BoundRow {
    int col;
    double width;
  };
  std::vector<BoundRow> bound_rows;
  for (int i = 0; i < n; ++i) {
    const double lo = lp.lower(i);
    const double hi = lp.upper(i);
    auto& v = vars[i];
    if (std::isfinite(lo)) {
      v.offset = lo;
      v.pos_col = cols++;
      if (std::isfinite(hi)) bound_rows.push_back({v.pos_col, hi - lo});
    } else if (std::isfinite(hi)) {
      v.offset = hi;
      v.neg_col = cols++;
    } else {
      v.pos_col = cols++;
      v.neg_col = cols++;
    }
  }
  const int structural = cols;

  struct Row {
    std::vector<double> a;  // over structural columns
    Relation rel;
    double rhs;
  };
  std::vector<Row> rows;
  rows.reserve(lp.constraints().size() + bound_rows.size());
  for (const auto& c : lp.constraints()) {
    Row r{std::vector<double>(static_cast<std::size_t>(structural), 0.0), c.relation, c.rhs};
    for (int i = 0; i < n; ++i) {
      const double a = c.coeffs[i];
      if (a == 0.0) continue;
      r.rhs -= a * vars[i].offset;
      if (vars[i].pos_col >= 0) r.a[vars[i].pos_col] += a;
      if (vars[i].neg_col >= 0) r.a[vars[i].neg_col] -= a;
    }
    // equilibrate
    double scale = 0.0;
    for (double v : r.a) scale = std::max(scale, std::abs(v));
    if (scale > 0.0) {
      for (double& v : r.a) v /= scale;
      r.rhs /= scale;
    } else {
      // empty row: either trivially satisfied or infeasible
      const bool ok = (r.rel == Relation::less_equal && r.rhs >= -opts.feasibility_tol) ||
                      (r.rel == Relation::greater_equal && r.rhs <= opts.feasibility_tol) ||
                      (r.rel == Relation::equal && std::abs(r.rhs) <= opts.feasibility_tol);
      if (!ok) return {LpStatus::infeasible, {}, 0.0, 0.0, 0};
      continue;
    }
    rows.push_back(std::move(r));
  }
  for (const auto& b : bound_rows) {
    Row r{std::vector<double>(static_cast<std::size_t>(structural), 0.0), Relation::less_equal, b.width};
    r.a[b.col] = 1.0;
    rows.push_back(std::move(r));
  }

  // normalize to rhs >= 0; a zero-rhs >= row becomes a <= row with a basic slack
  for (auto& r : rows) {
    if (r.rhs < 0.0 || (r.rhs == 0.0 && r.rel == Relation::greater_equal)) {
      for (double& v : r.a) v = -v;
      r.rhs = -r.rhs;
      if (r.rel == Relation::less_equal) {
        r.rel = Relation::greater_equal;
      } else if (r.rel == Relation::greater_equal) {
        r.rel = Relation::less_equal;
      }
    }
  }

  const int m = static_cast<int>(rows.size());
  int slack_count = 0;
  int art_count = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::equal) ++slack_count;
    if (r.rel != Relation::less_equal) ++art_count;
  }
  const int total = structural + slack_count + art_count;
  Tableau t(m, total);
  std::vector<int> basis(static_cast<std::size_t>(m), -1);
  std::vector<bool> is_art(static_cast<std::size_t>(total), false);
  int next_slack = structural;
  int next_art = structural + slack_count;
  for (int i = 0; i < m; ++i) {
    const auto& r = rows[i];
    for (int j = 0; j < structural; ++j) t.at(i, j) = r.a[j];
    t.rhs(i) = r.rhs;
    if (r.rel == Relation::less_equal) {
      t.at(i, next_slack) = 1.0;
      basis[i] = next_slack++;
    } else {
      if (r.rel == Relation::greater_equal) t.at(i, next_slack++) = -1.0;
      t.at(i, next_art) = 1.0;
      is_art[next_art] = true;
      basis[i] = next_art++;
    }
  }

  LpResult result;
  int pivots = 0;
  Simplex simplex(t, basis, opts, pivots);

  // phase 1: minimize the sum of artificials
  if (art_count > 0) {
    for (int j = 0; j <= total; ++j) t.cost(j) = 0.0;
    for (int i = 0; i < m; ++i) {
      if (!is_art[basis[i]]) continue;
      for (int j = 0; j <= total; ++j) {
        if (!is_art[j]) t.cost(j) -= t.at(i, j);
      }
    }
    const std::vector<bool> none(static_cast<std::size_t>(total), false);
    const LpStatus s = simplex.run(none);
    if (s == LpStatus::stalled) {
      result.status = s;
      result.pivots = pivots;
      return result;
    }
    if (-t.cost(total) > opts.feasibility_tol) {
      result.status = LpStatus::infeasible;
      result.pivots = pivots;
      return result;
    }
    // drive zero-level artificials out of the basis where possible
    for (int i = 0; i < m; ++i) {
      if (!is_art[basis[i]]) continue;
      int best = -1;
      for (int j = 0; j < total; ++j) {
        if (is_art[j]) continue;
        if (std::abs(t.at(i, j)) > opts.pivot_tol && (best < 0 || std::abs(t.at(i, j)) > std::abs(t.at(i, best)))) {
          best = j;
        }
      }
      if (best >= 0) {
        t.pivot(i, best);
        basis[i] = best;
        ++pivots;
      }
    }
  }

  // phase 2: minimize -objective
  std::vector<double> cost(static_cast<std::size_t>(total), 0.0);
  for (int i = 0; i < n; ++i) {
    const double c = lp.objective()[i];
    if (vars[i].pos_col >= 0) cost[vars[i].pos_col] -= c;
    if (vars[i].neg_col >= 0) cost[vars[i].neg_col] += c;
  }
  for (int j = 0; j < total; ++j) t.cost(j) = cost[j];
  t.cost(total) = 0.0;
  for (int i = 0; i < m; ++i) {
    const double cb = cost[basis[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j <= total; ++j) t.cost(j) -= cb * t.at(i, j);
  }
  const LpStatus s = simplex.run(is_art);
  result.pivots = pivots;
  if (s != LpStatus::optimal) {
    result.status = s;
    return result;
  }

  std::vector<double> colval(static_cast<std::size_t>(total), 0.0);
  for (int i = 0; i < m; ++i) colval[basis[i]] = std::max(t.rhs(i), 0.0);
  result.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double v = vars[i].offset;
    if (vars[i].pos_col >= 0) v += colval[vars[i].pos_col];
    if (vars[i].neg_col >= 0) v -= colval[vars[i].neg_col];
    result.x[i] = v;
  }
  result.value = 0.0;
  for (int i = 0; i < n; ++i) result.value += lp.objective()[i] * result.x[i];
  result.max_residual = lp.max_violation(result.x);
  double size = 1.0;
  for (double v : result.x) size = std::max(size, std::abs(v));
  result.status = result.max_residual <= opts.residual_tol * size ? LpStatus::optimal : LpStatus::stalled;
  return result;
}

}  // namespace bicyclic
