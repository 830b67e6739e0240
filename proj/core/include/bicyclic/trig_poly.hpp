#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bicyclic/circle.hpp"
#include "bicyclic/self_inversive.hpp"

namespace bicyclic {

/// A(t) = c + sum_j a_j sin((2j-1)t) + sum_j b_j cos((2j-1)t), j = 1..k.
/// These are exactly the restrictions of affine functionals to SM_2k, so
/// A(t) + A(t + pi) = 2c.
struct RakedTrigPoly {
  int k = 1;
  double c = 0.0;
  std::vector<double> a;  // sine coefficients
  std::vector<double> b;  // cosine coefficients

  static RakedTrigPoly zero(int k);

  double operator()(double t) const;
  double operator()(AnglePoint t) const { return (*this)(t.theta()); }
  double derivative(double t) const;
  double second_derivative(double t) const;

  bool is_zero() const;
  RakedTrigPoly rotated(double tau) const;  // t -> A(t - tau)
};

/// Affine functional alpha_0 + <alpha_1..2k, x> restricted to SM_2k.
/// alpha has 2k + 1 entries; coordinate order follows SM_2k.
RakedTrigPoly from_functional(const Eigen::VectorXd& alpha);
Eigen::VectorXd to_functional(const RakedTrigPoly& a);

/// D(z) with A(t) = z^{1-2k} D(z) at z = e^{it}; degree 4k-2.
/// Coefficient of z^{2j+2k-2} is (b_j - i a_j)/2, of z^{2k-2j} is
/// (b_j + i a_j)/2, of z^{2k-1} is c. Throws for the zero polynomial.
SelfInvPoly trig_to_selfinv(const RakedTrigPoly& a);

/// Inverse bridge for a raked self-inversive polynomial of degree 4k-2. The
/// result is determined up to a real sign (the unimodular scale of D).
RakedTrigPoly selfinv_to_trig(const SelfInvPoly& d);

enum class Localization { holds, violated, not_applicable };

/// Checks the root-localization property: if A has exactly 2k distinct roots in
/// the arc omega (length < pi), every other root on S^1 lies in omega + pi.
/// not_applicable when the hypotheses fail.
Localization root_localization_check(const RakedTrigPoly& a, const Arc& omega, const RootOptions& opts = {});

/// Angles of the distinct unit-circle roots of A, via its self-inversive image.
std::vector<AnglePoint> circle_roots(const RakedTrigPoly& a, const RootOptions& opts = {});

}  // namespace bicyclic
