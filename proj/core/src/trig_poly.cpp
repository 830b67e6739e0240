#include "bicyclic/trig_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace bicyclic {

RakedTrigPoly RakedTrigPoly::zero(int k) {
  if (k < 1) throw std::invalid_argument("RakedTrigPoly: k must be >= 1");
  return {k, 0.0, std::vector<double>(k, 0.0), std::vector<double>(k, 0.0)};
}

double RakedTrigPoly::operator()(double t) const {
  double v = c;
  for (int j = 0; j < k; ++j) {
    const double m = 2 * j + 1;
    v += a[j] * std::sin(m * t) + b[j] * std::cos(m * t);
  }
  return v;
}

double RakedTrigPoly::derivative(double t) const {
  double v = 0.0;
  for (int j = 0; j < k; ++j) {
    const double m = 2 * j + 1;
    v += m * (a[j] * std::cos(m * t) - b[j] * std::sin(m * t));
  }
  return v;
}

double RakedTrigPoly::second_derivative(double t) const {
  double v = 0.0;
  for (int j = 0; j < k; ++j) {
    const double m = 2 * j + 1;
    v -= m * m * (a[j] * std::sin(m * t) + b[j] * std::cos(m * t));
  }
  return v;
}

bool RakedTrigPoly::is_zero() const {
  if (c != 0.0) return false;
  for (int j = 0; j < k; ++j) {
    if (a[j] != 0.0 || b[j] != 0.0) return false;
  }
  return true;
}

RakedTrigPoly RakedTrigPoly::rotated(double tau) const {
  // sin(m(t - tau)) and cos(m(t - tau)) expanded in sin(mt), cos(mt)
  RakedTrigPoly r = *this;
  for (int j = 0; j < k; ++j) {
    const double m = 2 * j + 1;
    const double cs = std::cos(m * tau);
    const double sn = std::sin(m * tau);
    r.a[j] = a[j] * cs + b[j] * sn;
    r.b[j] = b[j] * cs - a[j] * sn;
  }
  return r;
}

RakedTrigPoly from_functional(const Eigen::VectorXd& alpha) {
  if (alpha.size() < 3 || alpha.size() % 2 == 0) {
    throw std::invalid_argument("from_functional: expected 2k + 1 coefficients");
  }
  const int k = static_cast<int>(alpha.size() - 1) / 2;
  RakedTrigPoly p = RakedTrigPoly::zero(k);
  p.c = alpha[0];
  for (int j = 0; j < k; ++j) {
    p.b[j] = alpha[1 + 2 * j];
    p.a[j] = alpha[2 + 2 * j];
  }
  return p;
}

Eigen::VectorXd to_functional(const RakedTrigPoly& p) {
  Eigen::VectorXd alpha(2 * p.k + 1);
  alpha[0] = p.c;
  for (int j = 0; j < p.k; ++j) {
    alpha[1 + 2 * j] = p.b[j];
    alpha[2 + 2 * j] = p.a[j];
  }
  return alpha;
}

SelfInvPoly trig_to_selfinv(const RakedTrigPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("trig_to_selfinv: zero polynomial");
  const int k = p.k;
  std::vector<Complex> d(static_cast<std::size_t>(4 * k - 1), Complex(0.0));
  d[2 * k - 1] = p.c;
  for (int j = 1; j <= k; ++j) {
    const double aj = p.a[j - 1];
    const double bj = p.b[j - 1];
    d[2 * j + 2 * k - 2] += Complex(bj, -aj) / 2.0;
    d[2 * k - 2 * j] += Complex(bj, aj) / 2.0;
  }
  return SelfInvPoly::from_coeffs(std::move(d));
}

RakedTrigPoly selfinv_to_trig(const SelfInvPoly& d) {
  const int m = d.degree();
  if (m < 2 || (m + 2) % 4 != 0) throw std::invalid_argument("selfinv_to_trig: degree must be 4k - 2");
  const int k = (m + 2) / 4;
  const auto bal = d.balanced();
  const auto& c = bal.coeffs();
  RakedTrigPoly p = RakedTrigPoly::zero(k);
  p.c = c[2 * k - 1].real();
  for (int j = 1; j <= k; ++j) {
    const Complex top = c[2 * j + 2 * k - 2];
    p.b[j - 1] = 2.0 * top.real();
    p.a[j - 1] = -2.0 * top.imag();
  }
  return p;
}

std::vector<AnglePoint> circle_roots(const RakedTrigPoly& p, const RootOptions& opts) {
  const auto roots = selfinv_roots(trig_to_selfinv(p), opts);
  std::vector<AnglePoint> out;
  out.reserve(roots.on_circle.size());
  for (const auto& e : roots.on_circle) out.emplace_back(std::arg(e.value));
  return out;
}

Localization root_localization_check(const RakedTrigPoly& p, const Arc& omega, const RootOptions& opts) {
  constexpr double kSlack = 1e-9;
  if (p.is_zero() || omega.length >= kPi) return Localization::not_applicable;
  const auto roots = circle_roots(p, opts);
  const Arc opposite = omega.shifted(kPi);
  int inside = 0;
  bool outside_ok = true;
  for (const auto& t : roots) {
    if (omega.contains(t, kSlack)) {
      ++inside;
    } else if (!opposite.contains(t, kSlack)) {
      outside_ok = false;
    }
  }
  if (inside != 2 * p.k) return Localization::not_applicable;
  return outside_ok ? Localization::holds : Localization::violated;
}

}  // namespace bicyclic
