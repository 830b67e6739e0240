#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "bicyclic/bounds.hpp"
#include "bicyclic/moment_curve.hpp"
#include "bicyclic/trig_poly.hpp"

using namespace bicyclic;

namespace {

RakedTrigPoly one_minus_cos(int k) {
  RakedTrigPoly a = RakedTrigPoly::zero(k);
  a.c = 1.0;
  a.b[k - 1] = -1.0;
  return a;
}

RakedTrigPoly random_poly(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RakedTrigPoly a = RakedTrigPoly::zero(k);
  a.c = u(rng);
  for (int j = 0; j < k; ++j) {
    a.a[j] = u(rng);
    a.b[j] = u(rng);
  }
  return a;
}

// affine functional vanishing on the given 2k angles
RakedTrigPoly through(int k, const std::vector<double>& ts) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(ts.size()), 2 * k + 1);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    m(static_cast<Eigen::Index>(i), 0) = 1.0;
    m.row(static_cast<Eigen::Index>(i)).tail(2 * k) = sm_eval(k, AnglePoint(ts[i])).coords.transpose();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  const Eigen::MatrixXd ker = lu.kernel();
  return from_functional(ker.col(0));
}

}  // namespace

TEST(TrigPoly, EvalExamples) {
  const auto a = one_minus_cos(2);
  EXPECT_NEAR(a(0.0), 0.0, 1e-15);
  EXPECT_NEAR(a(kTwoPi / 3), 0.0, 1e-14);
  EXPECT_NEAR(a(kPi / 3), 2.0, 1e-14);
  EXPECT_NEAR(a(AnglePoint(kPi / 3)), 2.0, 1e-14);
}

TEST(TrigPoly, FunctionalBridgeAgreesWithCurve) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int k = 1; k <= 5; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_poly(k, rng);
      const Eigen::VectorXd alpha = to_functional(a);
      ASSERT_EQ(alpha.size(), 2 * k + 1);
      const auto back = from_functional(alpha);
      EXPECT_DOUBLE_EQ(back.c, a.c);
      for (int i = 0; i < 10; ++i) {
        const double t = u(rng);
        const double affine = alpha[0] + alpha.tail(2 * k).dot(sm_eval(k, AnglePoint(t)).coords);
        EXPECT_NEAR(a(t), affine, 1e-12);
        // odd frequencies only: A(t) + A(t + pi) = 2c
        EXPECT_NEAR(a(t) + a(t + kPi), 2 * a.c, 1e-12);
      }
    }
  }
}

TEST(TrigPoly, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(2);
  const auto a = random_poly(3, rng);
  const double h = 1e-6;
  for (double t : {0.0, 0.4, 2.5, 5.9}) {
    EXPECT_NEAR(a.derivative(t), (a(t + h) - a(t - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(a.second_derivative(t), (a.derivative(t + h) - a.derivative(t - h)) / (2 * h), 1e-6);
  }
}

TEST(TrigPoly, Rotation) {
  std::mt19937_64 rng(3);
  const auto a = random_poly(3, rng);
  const auto r = a.rotated(0.7);
  for (double t : {0.0, 1.0, 4.0}) EXPECT_NEAR(r(t), a(t - 0.7), 1e-12);
}

TEST(TrigPoly, SelfInversiveImageExamples) {
  const auto d = trig_to_selfinv(one_minus_cos(2));
  const std::vector<Complex> expected{-0.5, 0.0, 0.0, 1.0, 0.0, 0.0, -0.5};
  ASSERT_EQ(d.degree(), 6);
  for (int p = 0; p <= 6; ++p) EXPECT_LT(std::abs(d.coeffs()[p] - expected[p]), 1e-15);

  RakedTrigPoly c = RakedTrigPoly::zero(3);
  c.c = 2.5;
  const auto dc = trig_to_selfinv(c);
  for (int p = 0; p <= dc.degree(); ++p) {
    EXPECT_LT(std::abs(dc.coeffs()[p] - (p == 5 ? Complex(2.5) : Complex(0.0))), 1e-15);
  }

  RakedTrigPoly cosine = RakedTrigPoly::zero(1);
  cosine.b[0] = 1.0;
  const auto dcos = trig_to_selfinv(cosine);
  ASSERT_EQ(dcos.degree(), 2);
  EXPECT_LT(std::abs(dcos.coeffs()[0] - 0.5), 1e-15);
  EXPECT_LT(std::abs(dcos.coeffs()[1]), 1e-15);
  EXPECT_LT(std::abs(dcos.coeffs()[2] - 0.5), 1e-15);

  EXPECT_THROW(trig_to_selfinv(RakedTrigPoly::zero(2)), std::invalid_argument);
}

TEST(TrigPoly, SelfInversiveImageReproducesValues) {
  std::mt19937_64 rng(4);
  for (int k = 1; k <= 6; ++k) {
    const auto a = random_poly(k, rng);
    const auto d = trig_to_selfinv(a);
    EXPECT_LT(d.raked_residual(), 1e-15);
    for (int g = 0; g < 1000; ++g) {
      const double t = kTwoPi * g / 1000;
      const Complex z = std::polar(1.0, t);
      const Complex v = std::polar(1.0, -(2 * k - 1) * t) * d(z);
      EXPECT_NEAR(a(t), v.real(), 1e-12);
      EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    }
    const auto back = selfinv_to_trig(d);
    const double sign = back.c * a.c >= 0 ? 1.0 : -1.0;
    EXPECT_NEAR(sign * back.c, a.c, 1e-12);
    for (int j = 0; j < k; ++j) {
      EXPECT_NEAR(sign * back.a[j], a.a[j], 1e-12);
      EXPECT_NEAR(sign * back.b[j], a.b[j], 1e-12);
    }
  }
}

TEST(TrigPoly, CircleRootsOfOneMinusCos) {
  for (int k = 2; k <= 5; ++k) {
    const auto roots = circle_roots(one_minus_cos(k));
    ASSERT_EQ(static_cast<int>(roots.size()), 2 * k - 1);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      EXPECT_NEAR(roots[j].theta(), kTwoPi * static_cast<double>(j) / (2 * k - 1), 1e-10);
    }
  }
}

TEST(TrigPoly, LocalizationVacuousAndNotApplicable) {
  // 1 - cos(3t) has no 4 roots in a short arc
  EXPECT_EQ(root_localization_check(one_minus_cos(2), Arc{AnglePoint(0.0), 0.3}), Localization::not_applicable);
  EXPECT_EQ(root_localization_check(one_minus_cos(2), Arc{AnglePoint(0.0), kPi}), Localization::not_applicable);
  EXPECT_EQ(root_localization_check(RakedTrigPoly::zero(2), Arc{AnglePoint(0.0), 0.3}),
            Localization::not_applicable);
}

TEST(TrigPoly, RootsOutsideAShortArcLieOpposite) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 2;
    const double start = kTwoPi * u(rng);
    const double len = 0.3;
    std::vector<double> ts;
    for (int i = 0; i < 2 * k; ++i) ts.push_back(start + len * (i + 0.8 * u(rng)) / (2 * k));
    const auto a = through(k, ts);
    const Arc omega{AnglePoint(start), len};
    const auto verdict = root_localization_check(a, omega);
    EXPECT_EQ(verdict, Localization::holds) << "trial " << trial;

    // independent dense sign scan: sign changes only inside omega or omega + pi;
    // the other roots may leave the circle altogether
    const int n = 100000;
    double prev = a(start + len + 1e-3);
    for (int g = 1; g <= n; ++g) {
      const double t = start + len + 1e-3 + (kTwoPi - len - 2e-3) * g / n;
      const double v = a(t);
      if ((v > 0) != (prev > 0)) {
        const AnglePoint where(t);
        EXPECT_TRUE(omega.shifted(kPi).contains(where, 1e-4)) << "trial " << trial << " t " << t;
      }
      prev = v;
    }
  }
}

TEST(TrigPoly, BinomialIdentityBehindDeformation) {
  // (x + 1/x)^(2n-1) = sum_j C(2n-1, j) x^(2n-1-2j)
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 100; ++i) {
      Complex x(u(rng), u(rng));
      if (std::abs(x) < 0.2) x += 0.5;
      const Complex lhs = std::pow(x + 1.0 / x, 2 * n - 1);
      Complex rhs = 0.0;
      for (int j = 0; j <= 2 * n - 1; ++j) rhs += static_cast<double>(binomial(2 * n - 1, j)) * std::pow(x, 2 * n - 1 - 2 * j);
      EXPECT_LT(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-12);
    }
  }
}
