#include "bicyclic/roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bicyclic/errors.hpp"

namespace bicyclic {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
  Complex value;
  Complex derivative;
  double abs_bound;  // sum |c_p| |z|^p, for the backward-error test
};

HornerResult horner(std::span<const Complex> c, Complex z, bool reversed) {
  const std::size_t m = c.size() - 1;
  auto coeff = [&](std::size_t p) { return reversed ? c[m - p] : c[p]; };
  Complex v = coeff(m);
  Complex dv = 0.0;
  double bound = std::abs(coeff(m));
  const double az = std::abs(z);
  for (std::size_t p = m; p-- > 0;) {
    dv = dv * z + v;
    v = v * z + coeff(p);
    bound = bound * az + std::abs(coeff(p));
  }
  return {v, dv, bound};
}

// Newton correction p(z)/p'(z) and a flag telling whether p(z) is already at
// rounding level. Points outside the unit disk go through the reversed
// polynomial to keep Horner from overflowing.
struct Correction {
  Complex ratio;
  bool at_noise_level;
};

Correction newton_correction(std::span<const Complex> c, Complex z) {
  const double m = static_cast<double>(c.size() - 1);
  const double gamma = 4.0 * m * kEps;
  if (std::abs(z) <= 1.0) {
    const auto h = horner(c, z, false);
    const bool noise = std::abs(h.value) <= gamma * h.abs_bound;
    if (h.derivative == Complex(0.0)) return {Complex(0.0), noise};
    return {h.value / h.derivative, noise};
  }
  const Complex y = 1.0 / z;
  const auto h = horner(c, y, true);
  const bool noise = std::abs(h.value) <= gamma * h.abs_bound;
  const Complex denom = m * h.value - y * h.derivative;
  if (denom == Complex(0.0)) return {Complex(0.0), noise};
  return {z * h.value / denom, noise};
}

// Starting points on circles whose radii come from the upper convex hull of
// (p, log|c_p|), one circle per hull edge.
std::vector<Complex> initial_guesses(std::span<const Complex> c) {
  const int m = static_cast<int>(c.size()) - 1;
  std::vector<int> hull;
  std::vector<double> logs(c.size());
  for (int p = 0; p <= m; ++p) {
    logs[p] = std::abs(c[p]) > 0.0 ? std::log(std::abs(c[p])) : -std::numeric_limits<double>::infinity();
  }
  for (int p = 0; p <= m; ++p) {
    if (!std::isfinite(logs[p])) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      // drop b if it lies on or below the segment a -> p
      const double cross = (logs[b] - logs[a]) * (p - a) - (logs[p] - logs[a]) * (b - a);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(m));
  constexpr double kOffset = 0.4;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e];
    const int j = hull[e + 1];
    const int count = j - i;
    const double radius = std::exp((logs[i] - logs[j]) / count);
    for (int l = 0; l < count; ++l) {
      const double angle = 2.0 * std::numbers::pi * l / count + 2.0 * std::numbers::pi * e / m + kOffset;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

Complex poly_eval(std::span<const Complex> coeffs, Complex z) {
  Complex v = 0.0;
  for (std::size_t p = coeffs.size(); p-- > 0;) v = v * z + coeffs[p];
  return v;
}

std::vector<Complex> poly_from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0));
    for (std::size_t p = 0; p < c.size(); ++p) {
      next[p + 1] += c[p];
      next[p] -= r * c[p];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Complex> aberth_roots(std::span<const Complex> coeffs, const RootFinderOptions& opts) {
  if (coeffs.size() < 2) throw std::invalid_argument("aberth_roots: polynomial must have degree >= 1");
  if (coeffs.back() == Complex(0.0)) throw std::invalid_argument("aberth_roots: leading coefficient is zero");

  // factor out z^r so every remaining root is nonzero
  std::size_t low = 0;
  while (coeffs[low] == Complex(0.0)) ++low;
  std::vector<Complex> roots(low, Complex(0.0));
  const auto c = coeffs.subspan(low);
  const std::size_t m = c.size() - 1;
  if (m == 0) return roots;
  if (m == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  std::vector<Complex> z = initial_guesses(c);
  std::vector<bool> settled(m, false);
  std::size_t remaining = m;
  for (int iter = 0; iter < opts.max_iterations && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      if (settled[i]) continue;
      const auto corr = newton_correction(c, z[i]);
      if (corr.at_noise_level) {
        settled[i] = true;
        --remaining;
        continue;
      }
      Complex sum = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      const Complex step = corr.ratio / (1.0 - corr.ratio * sum);
      z[i] -= step;
      if (std::abs(step) <= opts.update_tol * std::max(1.0, std::abs(z[i]))) {
        settled[i] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    throw NumericalError("aberth_roots: " + std::to_string(remaining) + " of " + std::to_string(m) +
                         " roots did not converge in " + std::to_string(opts.max_iterations) + " iterations");
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace bicyclic
