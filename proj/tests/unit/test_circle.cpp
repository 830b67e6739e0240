#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "bicyclic/circle.hpp"

using namespace bicyclic;

TEST(Circle, NormalizeAngle) {
  EXPECT_DOUBLE_EQ(normalize_angle(0.0), 0.0);
  EXPECT_NEAR(normalize_angle(-0.5), kTwoPi - 0.5, 1e-15);
  EXPECT_NEAR(normalize_angle(7.0), 7.0 - kTwoPi, 1e-15);
  EXPECT_LT(normalize_angle(kTwoPi), kTwoPi);
  EXPECT_GE(normalize_angle(-1e-18), 0.0);
}

TEST(Circle, ArcDistanceExamples) {
  EXPECT_NEAR(arc_distance(AnglePoint(0.0), AnglePoint(kPi / 2)), kPi / 2, 1e-15);
  EXPECT_NEAR(arc_distance(AnglePoint(0.0), AnglePoint(kPi)), kPi, 1e-15);
  EXPECT_NEAR(arc_distance(AnglePoint(0.1), AnglePoint(kTwoPi - 0.1)), 0.2, 1e-14);
}

TEST(Circle, ArcDistanceIsAMetricOnRandomPoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const AnglePoint a(u(rng)), b(u(rng)), c(u(rng));
    const double ab = arc_distance(a, b);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, kPi);
    EXPECT_DOUBLE_EQ(ab, arc_distance(b, a));
    EXPECT_LE(ab, arc_distance(a, c) + arc_distance(c, b) + 1e-12);
    // rotation invariance
    const double tau = u(rng);
    EXPECT_NEAR(ab, arc_distance(a.rotated(tau), b.rotated(tau)), 1e-12);
    EXPECT_NEAR(arc_distance(a, a.antipode()), kPi, 1e-12);
  }
}

TEST(Circle, CoveringArc) {
  const auto pts = to_angles(std::vector<double>{0.1, 0.3, kTwoPi - 0.2});
  const Arc arc = covering_arc(pts);
  EXPECT_NEAR(arc.length, 0.5, 1e-12);
  EXPECT_NEAR(arc.start.theta(), kTwoPi - 0.2, 1e-12);
  for (const auto& p : pts) EXPECT_TRUE(arc.contains(p, 1e-12));
  EXPECT_FALSE(arc.contains(AnglePoint(1.0)));
  const AnglePoint single[] = {AnglePoint(2.0)};
  EXPECT_DOUBLE_EQ(covering_arc(single).length, 0.0);
}

TEST(Circle, EquallySpaced) {
  const auto four = equally_spaced(4);
  ASSERT_EQ(four.size(), 4u);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(four[j].theta(), j * kPi / 2, 1e-15);

  const auto two = equally_spaced(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(two[1].theta(), kPi, 1e-15);

  const auto six = equally_spaced(6);
  ASSERT_EQ(six.size(), 6u);
  for (int j = 0; j < 6; ++j) EXPECT_NEAR(six[j].theta(), j * kPi / 3, 1e-14);
  // both inscribed triangles are present
  for (int s = 0; s < 2; ++s) {
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(six[s + 2 * j].theta(), s * kPi / 3 + j * 2 * kPi / 3, 1e-14);
  }
  for (std::size_t i = 0; i < six.size(); ++i) EXPECT_EQ(six.antipode_index(i), (i + 3) % 6);

  EXPECT_THROW(equally_spaced(5), std::invalid_argument);
  EXPECT_THROW(equally_spaced(0), std::invalid_argument);
}

TEST(Circle, Symmetrize) {
  const auto ys = to_angles(std::vector<double>{0.1, 0.2});
  const auto x = symmetrize(ys);
  ASSERT_EQ(x.size(), 4u);
  EXPECT_NEAR(x[0].theta(), 0.1, 1e-15);
  EXPECT_NEAR(x[1].theta(), 0.2, 1e-15);
  EXPECT_NEAR(x[2].theta(), 0.1 + kPi, 1e-15);
  EXPECT_NEAR(x[3].theta(), 0.2 + kPi, 1e-15);

  const auto three = symmetrize(to_angles(std::vector<double>{0.0, 0.3, 0.6}));
  EXPECT_EQ(three.size(), 6u);

  const auto antipodes = to_angles(std::vector<double>{0.0, kPi});
  EXPECT_THROW(symmetrize(antipodes), std::invalid_argument);
}

TEST(Circle, SymmetricSetValidation) {
  EXPECT_THROW(SymmetricPointSet(to_angles(std::vector<double>{0.0, 1.0})), std::invalid_argument);
  EXPECT_THROW(SymmetricPointSet(to_angles(std::vector<double>{0.0, kPi, 0.0, kPi})), std::invalid_argument);
  EXPECT_NO_THROW(SymmetricPointSet(to_angles(std::vector<double>{0.5, 0.5 + kPi})));
}

TEST(Circle, RandomSymmetrizationIsClosedUnderAntipodes) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<AnglePoint> ys;
    for (int i = 0; i < 7; ++i) ys.emplace_back(u(rng));
    const auto x = symmetrize(ys);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto j = x.antipode_index(i);
      EXPECT_NEAR(arc_distance(x[i].antipode(), x[j]), 0.0, 1e-12);
      if (i > 0) { EXPECT_LT(x[i - 1].theta(), x[i].theta()); }
    }
  }
}
