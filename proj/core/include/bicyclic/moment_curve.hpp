#pragma once

#include <Eigen/Dense>

#include "bicyclic/circle.hpp"

namespace bicyclic {

/// SM_2k(t) = (cos t, sin t, cos 3t, sin 3t, ..., cos (2k-1)t, sin (2k-1)t).
struct CurvePoint {
  int k = 0;
  Eigen::VectorXd coords;
  AnglePoint source_angle;
};

CurvePoint sm_eval(int k, AnglePoint t);

/// d^order/dt^order SM_2k(t), computed with the phase-shift formulas.
/// Valid orders are 0 .. 2k-1.
Eigen::VectorXd sm_derivative(int k, AnglePoint t, int order);

/// Rows are the derivatives of orders 0 .. 2k-1 at t.
Eigen::MatrixXd derivative_matrix(int k, AnglePoint t);

/// |det| of derivative_matrix(k, t). Nonzero for every t (the curve is nowhere
/// locally flat) and independent of t.
double nonflatness_check(int k, AnglePoint t);

/// Same determinant after scaling every row to unit Euclidean norm.
double normalized_nonflatness(int k, AnglePoint t);

}  // namespace bicyclic
