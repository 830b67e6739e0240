#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bicyclic/circle.hpp"
#include "bicyclic/errors.hpp"
#include "bicyclic/roots.hpp"

using namespace bicyclic;

namespace {

// greedy matching distance between two root lists of the same size
double match_error(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  for (const auto& z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex p, Complex q) { return std::abs(p - z) < std::abs(q - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

}  // namespace

TEST(Roots, PolyEvalAndFromRoots) {
  const std::vector<Complex> roots{1.0, -2.0, Complex(0, 1)};
  const auto c = poly_from_roots(roots);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.back(), Complex(1.0));
  for (const auto& r : roots) EXPECT_LT(std::abs(poly_eval(c, r)), 1e-14);
  EXPECT_NEAR(std::abs(poly_eval(c, 3.0) - (2.0 * 5.0 * Complex(3, -1))), 0.0, 1e-12);
}

TEST(Roots, AberthSimpleCases) {
  // z^2 + 1
  const std::vector<Complex> c{1.0, 0.0, 1.0};
  const auto r = aberth_roots(c);
  EXPECT_LT(match_error(r, {Complex(0, 1), Complex(0, -1)}), 1e-13);

  // z^5 - 1
  std::vector<Complex> c5(6, 0.0);
  c5[0] = -1.0;
  c5[5] = 1.0;
  std::vector<Complex> unity;
  for (int j = 0; j < 5; ++j) unity.push_back(std::polar(1.0, 2 * kPi * j / 5));
  EXPECT_LT(match_error(aberth_roots(c5), unity), 1e-13);
}

TEST(Roots, AberthRecoversRandomRoots) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + trial % 12;
    std::vector<Complex> roots;
    for (int i = 0; i < m; ++i) roots.emplace_back(g(rng), g(rng));
    const auto found = aberth_roots(poly_from_roots(roots));
    ASSERT_EQ(found.size(), roots.size());
    EXPECT_LT(match_error(found, roots), 1e-8) << "trial " << trial;
  }
}

TEST(Roots, AberthRejectsBadInput) {
  const std::vector<Complex> zero_lead{1.0, 2.0, 0.0};
  EXPECT_THROW(aberth_roots(zero_lead), std::invalid_argument);
}

TEST(Roots, AberthHandlesMultipleRoots) {
  // (z - 1)^2 (z + 2)
  const std::vector<Complex> roots{1.0, 1.0, -2.0};
  const auto found = aberth_roots(poly_from_roots(roots));
  EXPECT_LT(match_error(found, roots), 1e-6);
}
