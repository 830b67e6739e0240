#include <gtest/gtest.h>

#include <random>

#include "bicyclic/face_oracle.hpp"

using namespace bicyclic;

namespace {

std::vector<AnglePoint> angles(std::initializer_list<double> ts) {
  std::vector<AnglePoint> out;
  for (double t : ts) out.emplace_back(t);
  return out;
}

}  // namespace

TEST(BodyFace, Examples) {
  const auto short_pair = angles({-0.5, 0.5});
  const auto r = body_face_certificate(2, short_pair);
  ASSERT_EQ(r.outcome, BodyOutcome::verified) << r.reason;
  EXPECT_TRUE(r.certificate.verified);
  EXPECT_EQ(r.certificate.kind, CertificateKind::body_face);
  EXPECT_GT(r.lp_margin, 0.0);
  for (const auto& t : short_pair) EXPECT_LT(std::abs(r.certificate.functional(t)), 1e-9);

  // arc 2.4 exceeds 2pi/3
  const auto long_pair = angles({-1.2, 1.2});
  EXPECT_NE(body_face_certificate(2, long_pair).outcome, BodyOutcome::verified);

  const auto triple = angles({0.0, 0.1, 0.2});
  const auto r3 = body_face_certificate(3, triple);
  ASSERT_EQ(r3.outcome, BodyOutcome::verified) << r3.reason;
  EXPECT_TRUE(revalidate_body(r3.certificate));
}

TEST(BodyFace, InputValidation) {
  EXPECT_THROW(body_face_certificate(0, angles({0.0})), std::invalid_argument);
  EXPECT_THROW(body_face_certificate(2, std::vector<AnglePoint>{}), std::invalid_argument);
  EXPECT_THROW(body_face_certificate(2, angles({0.0, 0.1, 0.2, 0.3})), std::invalid_argument);
  EXPECT_THROW(body_face_certificate(2, angles({0.3, 0.3})), std::invalid_argument);
}

TEST(BodyFace, RevalidateRejectsTamperedCertificates) {
  const auto r = body_face_certificate(2, angles({-0.4, 0.4}));
  ASSERT_EQ(r.outcome, BodyOutcome::verified);
  auto shifted = r.certificate;
  shifted.functional.c -= 0.1;  // now negative at the zeros
  EXPECT_FALSE(revalidate_body(shifted));
  auto moved = r.certificate;
  moved.zero_set = angles({-0.4, 0.6});
  EXPECT_FALSE(revalidate_body(moved));
}

TEST(BodyFace, ShortArcsShrinkToShorterArcs) {
  // if [-t/2, t/2] spans an edge then so does every shorter symmetric pair
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 2; k <= 4; ++k) {
    const double base = 1.6;  // below 2pi/3 and the larger k thresholds
    ASSERT_EQ(body_face_certificate(k, angles({-base / 2, base / 2})).outcome, BodyOutcome::verified);
    for (int i = 0; i < 50; ++i) {
      const double t = base * (0.02 + 0.98 * u(rng));
      const auto r = body_face_certificate(k, angles({-t / 2, t / 2}));
      EXPECT_EQ(r.outcome, BodyOutcome::verified) << "k " << k << " arc " << t << " " << r.reason;
    }
  }
}

TEST(BodyFace, LocallyNeighborlyOnShortArcs) {
  // every set of at most k points in an arc of length 0.1 spans a face
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 2; k <= 3; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      const double start = kTwoPi * u(rng);
      const int m = 1 + trial % k;
      std::vector<AnglePoint> ts;
      for (int i = 0; i < m; ++i) ts.emplace_back(start + 0.1 * (i + 0.5 * u(rng)) / m);
      const auto r = body_face_certificate(k, ts);
      EXPECT_EQ(r.outcome, BodyOutcome::verified) << "k " << k << " trial " << trial << " " << r.reason;
    }
  }
}

TEST(BodyFace, RotationInvariance) {
  const auto base = angles({0.2, 0.9});
  for (double tau : {0.5, 2.0, 4.4}) {
    std::vector<AnglePoint> turned;
    for (const auto& t : base) turned.push_back(t.rotated(tau));
    EXPECT_EQ(body_face_certificate(2, turned).outcome, BodyOutcome::verified);
  }
}

TEST(Psi, BracketsTheSmilanskyThreshold) {
  const auto psi = psi_estimate(2, 0.01);
  EXPECT_LE(psi.lo, 2 * kPi / 3 + 1e-9);
  EXPECT_GE(psi.hi, 2 * kPi / 3 - 1e-9);
  EXPECT_LE(psi.hi - psi.lo, 0.01);
  EXPECT_TRUE(psi.lo_verified);
  EXPECT_GT(psi.evaluations, 0);
  EXPECT_EQ(static_cast<int>(psi.trace.size()), psi.evaluations);
}

TEST(Psi, FineToleranceStaysBelowPi) {
  const auto psi = psi_estimate(2, 0.001);
  EXPECT_LT(psi.hi, kPi);
  EXPECT_LE(psi.hi - psi.lo, 0.001);
}

TEST(Psi, RejectsBadArguments) {
  EXPECT_THROW(psi_estimate(2, 0.0), std::invalid_argument);
  EXPECT_THROW(psi_estimate(2, -0.1), std::invalid_argument);
  EXPECT_THROW(psi_estimate(2, 1.0), std::invalid_argument);
  EXPECT_THROW(psi_estimate(2, std::nan("")), std::invalid_argument);
  EXPECT_THROW(psi_estimate(1, 0.01), std::invalid_argument);
}

TEST(Psi, OutcomeNames) {
  EXPECT_EQ(to_string(BodyOutcome::verified), "verified");
  EXPECT_EQ(to_string(BodyOutcome::infeasible), "infeasible");
  EXPECT_EQ(to_string(BodyOutcome::not_verified), "not_verified");
}
