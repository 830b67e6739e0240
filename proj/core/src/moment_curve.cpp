#include "bicyclic/moment_curve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bicyclic {
namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("symmetric moment curve: k must be >= 1, got " + std::to_string(k));
}

}  // namespace

CurvePoint sm_eval(int k, AnglePoint t) {
  check_k(k);
  CurvePoint p{k, Eigen::VectorXd(2 * k), t};
  for (int j = 0; j < k; ++j) {
    const double m = 2 * j + 1;
    p.coords[2 * j] = std::cos(m * t.theta());
    p.coords[2 * j + 1] = std::sin(m * t.theta());
  }
  return p;
}

Eigen::VectorXd sm_derivative(int k, AnglePoint t, int order) {
  check_k(k);
  if (order < 0 || order > 2 * k - 1) {
    throw std::invalid_argument("sm_derivative: order must lie in [0, " + std::to_string(2 * k - 1) +
                                "], got " + std::to_string(order));
  }
  Eigen::VectorXd v(2 * k);
  for (int j = 0; j < k; ++j) {
    const double m = 2 * j + 1;
    const double c = std::cos(m * t.theta());
    const double s = std::sin(m * t.theta());
    const double scale = std::pow(m, order);
    // d^r cos(mt) = m^r cos(mt + r pi/2), d^r sin(mt) = m^r sin(mt + r pi/2)
    switch (order % 4) {
      case 0: v[2 * j] = c;  v[2 * j + 1] = s;  break;
      case 1: v[2 * j] = -s; v[2 * j + 1] = c;  break;
      case 2: v[2 * j] = -c; v[2 * j + 1] = -s; break;
      default: v[2 * j] = s; v[2 * j + 1] = -c; break;
    }
    v[2 * j] *= scale;
    v[2 * j + 1] *= scale;
  }
  return v;
}

Eigen::MatrixXd derivative_matrix(int k, AnglePoint t) {
  check_k(k);
  Eigen::MatrixXd m(2 * k, 2 * k);
  for (int r = 0; r < 2 * k; ++r) m.row(r) = sm_derivative(k, t, r).transpose();
  return m;
}

double nonflatness_check(int k, AnglePoint t) {
  return std::abs(derivative_matrix(k, t).partialPivLu().determinant());
}

double normalized_nonflatness(int k, AnglePoint t) {
  Eigen::MatrixXd m = derivative_matrix(k, t);
  for (int r = 0; r < m.rows(); ++r) m.row(r).normalize();
  return std::abs(m.partialPivLu().determinant());
}

}  // namespace bicyclic
