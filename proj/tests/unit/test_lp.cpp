#include <gtest/gtest.h>

#include <random>

#include "bicyclic/lp.hpp"

using namespace bicyclic;

TEST(Lp, Examples) {
  LinearProgram bounded(1);
  bounded.set_objective({1.0});
  bounded.add_constraint({1.0}, Relation::less_equal, 1.0);
  const auto r = lp_solve(bounded);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_NEAR(r.x[0], 1.0, 1e-12);

  LinearProgram empty(1);
  empty.set_objective({1.0});
  empty.add_constraint({1.0}, Relation::less_equal, 1.0);
  empty.add_constraint({1.0}, Relation::greater_equal, 2.0);
  EXPECT_EQ(lp_solve(empty).status, LpStatus::infeasible);

  LinearProgram ray(1);
  ray.set_objective({1.0});
  ray.add_constraint({1.0}, Relation::greater_equal, 0.0);
  EXPECT_EQ(lp_solve(ray).status, LpStatus::unbounded);
}

TEST(Lp, EqualitiesBoundsAndFreeVariables) {
  // max x + 2y  s.t.  x + y = 3, x - y <= 1, y in [-1, 2], x free
  LinearProgram lp(2);
  lp.set_objective({1.0, 2.0});
  lp.add_constraint({1.0, 1.0}, Relation::equal, 3.0);
  lp.add_constraint({1.0, -1.0}, Relation::less_equal, 1.0);
  lp.set_bounds(1, -1.0, 2.0);
  const auto r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_NEAR(r.x[0], 1.0, 1e-10);
  EXPECT_NEAR(r.x[1], 2.0, 1e-10);
  EXPECT_NEAR(r.value, 5.0, 1e-10);
  EXPECT_LT(r.max_residual, 1e-9);

  // negative region only reachable through a free variable
  LinearProgram neg(1);
  neg.set_objective({-1.0});
  neg.add_constraint({1.0}, Relation::greater_equal, -4.0);
  const auto rn = lp_solve(neg);
  ASSERT_EQ(rn.status, LpStatus::optimal);
  EXPECT_NEAR(rn.x[0], -4.0, 1e-12);

  // upper bound only
  LinearProgram up(1);
  up.set_objective({1.0});
  up.set_bounds(0, -kInf, 2.5);
  const auto ru = lp_solve(up);
  ASSERT_EQ(ru.status, LpStatus::optimal);
  EXPECT_NEAR(ru.x[0], 2.5, 1e-12);
}

TEST(Lp, InputValidation) {
  EXPECT_THROW(LinearProgram(0), std::invalid_argument);
  LinearProgram lp(2);
  EXPECT_THROW(lp.set_objective({1.0}), std::invalid_argument);
  EXPECT_THROW(lp.add_constraint({1.0}, Relation::equal, 0.0), std::invalid_argument);
  EXPECT_THROW(lp.add_constraint({1.0, std::nan("")}, Relation::equal, 0.0), std::invalid_argument);
  EXPECT_THROW(lp.set_bounds(0, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(lp.set_bounds(3, 0.0, 1.0), std::invalid_argument);
}

TEST(Lp, ZeroRowsAndRedundantEqualities) {
  LinearProgram lp(2);
  lp.set_objective({1.0, 1.0});
  lp.add_constraint({0.0, 0.0}, Relation::equal, 0.0);
  lp.add_constraint({1.0, 1.0}, Relation::equal, 1.0);
  lp.add_constraint({2.0, 2.0}, Relation::equal, 2.0);
  lp.set_bounds(0, 0.0, 1.0);
  lp.set_bounds(1, 0.0, 1.0);
  const auto r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_NEAR(r.value, 1.0, 1e-10);

  LinearProgram bad(1);
  bad.add_constraint({0.0}, Relation::equal, 1.0);
  EXPECT_EQ(lp_solve(bad).status, LpStatus::infeasible);
}

TEST(Lp, DegenerateCyclingExample) {
  // Beale's example cycles under textbook Dantzig pricing without anti-cycling
  LinearProgram lp(4);
  lp.set_objective({0.75, -150.0, 0.02, -6.0});
  lp.add_constraint({0.25, -60.0, -0.04, 9.0}, Relation::less_equal, 0.0);
  lp.add_constraint({0.5, -90.0, -0.02, 3.0}, Relation::less_equal, 0.0);
  lp.add_constraint({0.0, 0.0, 1.0, 0.0}, Relation::less_equal, 1.0);
  for (int i = 0; i < 4; ++i) lp.set_bounds(i, 0.0, kInf);
  const auto r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_NEAR(r.value, 0.05, 1e-9);
}

TEST(Lp, RandomProgramsBeatRandomFeasiblePoints) {
  // Boxed random programs around a known feasible point: the optimum is
  // feasible and no sampled feasible point does better.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    const int m = 3 + trial % 9;
    std::vector<double> x0(n);
    for (auto& v : x0) v = 0.5 * u(rng);
    LinearProgram lp(n);
    std::vector<double> c(n);
    for (auto& v : c) v = u(rng);
    lp.set_objective(c);
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (int i = 0; i < m; ++i) {
      std::vector<double> a(n);
      double ax = 0.0;
      for (int j = 0; j < n; ++j) {
        a[j] = u(rng);
        ax += a[j] * x0[j];
      }
      rows.push_back(a);
      rhs.push_back(ax + 0.3 * (u(rng) + 1.0));
      lp.add_constraint(a, Relation::less_equal, rhs.back());
    }
    for (int j = 0; j < n; ++j) lp.set_bounds(j, -1.0, 1.0);
    const auto r = lp_solve(lp);
    ASSERT_EQ(r.status, LpStatus::optimal) << "trial " << trial;
    EXPECT_LT(lp.max_violation(r.x), 1e-9);
    for (int s = 0; s < 200; ++s) {
      std::vector<double> y(n);
      for (auto& v : y) v = u(rng);
      if (lp.max_violation(y) > 0.0) continue;
      double cy = 0.0;
      for (int j = 0; j < n; ++j) cy += c[j] * y[j];
      EXPECT_LE(cy, r.value + 1e-9);
    }
  }
}

TEST(Lp, StatusNames) {
  EXPECT_EQ(to_string(LpStatus::optimal), "optimal");
  EXPECT_EQ(to_string(LpStatus::infeasible), "infeasible");
  EXPECT_EQ(to_string(LpStatus::unbounded), "unbounded");
  EXPECT_EQ(to_string(LpStatus::stalled), "stalled");
}
