#include <gtest/gtest.h>

#include <random>

#include "bicyclic/polytope.hpp"

using namespace bicyclic;

TEST(Polytope, EightPointsInFourSpace) {
  const auto p = Polytope::build(2, equally_spaced(8));
  EXPECT_EQ(p.ambient_dim(), 4);
  EXPECT_EQ(p.affine_dim(), 4);
  EXPECT_FALSE(p.degenerate());
  EXPECT_EQ(p.size(), 8);
  EXPECT_TRUE(p.non_vertices().empty());
  EXPECT_TRUE(p.centrally_symmetric());
  for (int i = 0; i < 8; ++i) EXPECT_EQ(p.antipode_index(i), (i + 4) % 8);
}

TEST(Polytope, TwoPointsAreDegenerate) {
  const auto p = Polytope::build(2, equally_spaced(2));
  EXPECT_TRUE(p.degenerate());
  EXPECT_EQ(p.affine_dim(), 1);
}

TEST(Polytope, TwelvePointsInSixSpace) {
  const auto p = Polytope::build(3, equally_spaced(12));
  EXPECT_EQ(p.affine_dim(), 6);
  EXPECT_EQ(p.size(), 12);
  EXPECT_TRUE(p.non_vertices().empty());
}

TEST(Polytope, RejectsBadInput) {
  const auto dup = to_angles(std::vector<double>{0.0, 1.0, 1.0 + 1e-12});
  EXPECT_THROW(Polytope::build(2, dup), std::invalid_argument);
  EXPECT_THROW(Polytope::build(0, equally_spaced(4)), std::invalid_argument);
}

TEST(Polytope, NonSymmetricInput) {
  const auto xs = to_angles(std::vector<double>{0.0, 0.5, 1.3, 2.9, 4.0});
  const auto p = Polytope::build(2, xs);
  EXPECT_FALSE(p.centrally_symmetric());
  EXPECT_EQ(p.affine_dim(), 4);
  for (int i = 0; i < p.size(); ++i) EXPECT_EQ(p.antipode_index(i), -1);
}

TEST(Polytope, AffineRank) {
  const auto p = Polytope::build(2, equally_spaced(12));
  const int edge[] = {0, 1};
  const int tri[] = {0, 4, 8};
  const int four[] = {0, 1, 2, 3};
  const int antipodal[] = {0, 6};
  EXPECT_EQ(p.affine_rank(edge), 1);
  EXPECT_EQ(p.affine_rank(tri), 2);
  EXPECT_EQ(p.affine_rank(four), 3);
  EXPECT_EQ(p.affine_rank(antipodal), 1);
}

TEST(Polytope, RandomLayoutsAreFullDimensional) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 3;
    std::vector<AnglePoint> ys;
    for (int i = 0; i < 2 * k + 2; ++i) ys.emplace_back(u(rng));
    const auto p = Polytope::build(k, symmetrize(ys));
    EXPECT_EQ(p.affine_dim(), 2 * k);
    EXPECT_TRUE(p.non_vertices().empty());
    EXPECT_TRUE(p.centrally_symmetric());
  }
}
