#include "bicyclic/self_inversive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bicyclic/circle.hpp"

namespace bicyclic {
namespace {

// Coefficients this small relative to the largest are treated as zero when
// stripping z^r factors before root finding.
constexpr double kNegligibleCoeff = 1e-13;
constexpr double kLooseCircleTol = 1e-5;

double max_abs(std::span<const Complex> c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

template <typename Map>
bool closed_under(const std::vector<RootEntry>& entries, double tol, Map map) {
  for (const auto& e : entries) {
    const Complex target = map(e.value);
    const double scale = std::max(1.0, std::abs(target));
    bool found = false;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (entries[j].multiplicity == e.multiplicity && std::abs(entries[j].value - target) <= tol * scale) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

SelfInvPoly SelfInvPoly::from_coeffs(std::vector<Complex> coeffs, double tol) {
  if (coeffs.empty()) throw std::invalid_argument("SelfInvPoly: empty coefficient vector");
  const double big = max_abs(coeffs);
  if (big == 0.0) throw std::invalid_argument("SelfInvPoly: zero polynomial");
  const std::size_t m = coeffs.size() - 1;
  std::size_t pivot = 0;
  for (std::size_t p = 0; p <= m; ++p) {
    if (std::abs(coeffs[p]) == big) {
      pivot = p;
      break;
    }
  }
  const Complex mirror = std::conj(coeffs[m - pivot]);
  if (std::abs(mirror) < (1.0 - tol) * big) {
    throw std::invalid_argument("SelfInvPoly: coefficients are not self-inversive (|d_p| != |d_{m-p}|)");
  }
  Complex omega = coeffs[pivot] / mirror;
  omega /= std::abs(omega);
  for (std::size_t p = 0; p <= m; ++p) {
    if (std::abs(coeffs[p] - omega * std::conj(coeffs[m - p])) > tol * big) {
      throw std::invalid_argument("SelfInvPoly: self-inversive relation violated at index " + std::to_string(p));
    }
  }
  return SelfInvPoly(std::move(coeffs), omega);
}

SelfInvPoly SelfInvPoly::balanced() const {
  const Complex beta = std::sqrt(std::conj(omega_));
  std::vector<Complex> c = coeffs_;
  for (auto& x : c) x *= beta;
  return SelfInvPoly(std::move(c), Complex(1.0));
}

double SelfInvPoly::max_abs_coeff() const { return max_abs(coeffs_); }

double SelfInvPoly::raked_residual() const {
  const int m = degree();
  double worst = 0.0;
  for (int p = 1; p <= m; p += 2) {
    if (2 * p == m) continue;
    worst = std::max(worst, std::abs(coeffs_[p]));
  }
  return worst / max_abs_coeff();
}

double SelfInvPoly::imag_residual() const {
  double worst = 0.0;
  for (const auto& x : coeffs_) worst = std::max(worst, std::abs(x.imag()));
  return worst / max_abs_coeff();
}

RootMultiset::RootMultiset(std::vector<RootEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.multiplicity < 1) throw std::invalid_argument("RootMultiset: multiplicity must be positive");
    if (e.value == Complex(0.0)) throw std::invalid_argument("RootMultiset: zero is not allowed");
  }
}

RootMultiset RootMultiset::cluster(std::span<const Complex> values, double radius) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(values[i] - values[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<RootEntry> out;
  std::vector<std::size_t> root_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (root_of[r] == n) {
      root_of[r] = out.size();
      out.push_back({Complex(0.0), 0});
    }
    auto& e = out[root_of[r]];
    e.value += values[i];
    e.multiplicity += 1;
  }
  for (auto& e : out) e.value /= static_cast<double>(e.multiplicity);
  return RootMultiset(std::move(out));
}

int RootMultiset::size() const {
  int s = 0;
  for (const auto& e : entries_) s += e.multiplicity;
  return s;
}

std::vector<Complex> RootMultiset::expanded() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  return out;
}

bool RootMultiset::is_inverse_conjugate_closed(double tol) const {
  return closed_under(entries_, tol, [](Complex z) { return 1.0 / std::conj(z); });
}

bool RootMultiset::is_inverse_closed(double tol) const {
  return closed_under(entries_, tol, [](Complex z) { return 1.0 / z; });
}

bool RootMultiset::is_conjugate_closed(double tol) const {
  return closed_under(entries_, tol, [](Complex z) { return std::conj(z); });
}

namespace {

// Aberth only gets a cluster of m roots to ~eps^(1/m); the cluster mean is a
// simple root of the (m-1)-th derivative, so Newton there recovers full accuracy.
RootMultiset polish_multiple(std::span<const Complex> coeffs, const RootMultiset& m, double radius) {
  std::vector<RootEntry> entries = m.entries();
  for (auto& e : entries) {
    if (e.multiplicity < 2) continue;
    std::vector<Complex> q(coeffs.begin(), coeffs.end());  // ascending powers
    for (int r = 1; r < e.multiplicity; ++r) {
      for (std::size_t i = 1; i < q.size(); ++i) q[i - 1] = static_cast<double>(i) * q[i];
      q.pop_back();
    }
    std::vector<Complex> dq(q.size() > 1 ? q.size() - 1 : 1, Complex(0.0));
    for (std::size_t i = 1; i < q.size(); ++i) dq[i - 1] = static_cast<double>(i) * q[i];
    Complex z = e.value;
    for (int it = 0; it < 8; ++it) {
      const Complex slope = poly_eval(dq, z);
      if (slope == Complex(0.0)) break;
      const Complex step = poly_eval(q, z) / slope;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    if (std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z - e.value) <= radius) e.value = z;
  }
  return RootMultiset(std::move(entries));
}

}  // namespace

SelfInvRoots selfinv_roots(const SelfInvPoly& d, const RootOptions& opts) {
  const auto& c = d.coeffs();
  const double big = d.max_abs_coeff();
  std::size_t lo = 0;
  std::size_t hi = c.size() - 1;
  while (lo < hi && std::abs(c[lo]) <= kNegligibleCoeff * big) ++lo;
  while (hi > lo && std::abs(c[hi]) <= kNegligibleCoeff * big) --hi;

  SelfInvRoots out;
  if (hi == lo) {
    out.pairing_ok = true;
    return out;
  }
  const std::span<const Complex> effective(c.data() + lo, hi - lo + 1);
  const auto raw = aberth_roots(effective, opts.finder);
  out.roots = polish_multiple(effective, RootMultiset::cluster(raw, opts.cluster_radius), opts.cluster_radius);
  const auto& all = out.roots.entries();
  for (const auto& e : all) {
    // Off-circle roots come in pairs (zeta, 1/conj zeta). A root a little off
    // the circle whose closest partner candidate is its own mirror image is an
    // ill-conditioned circle root, not half of a pair.
    const double gap = std::abs(std::abs(e.value) - 1.0);
    bool on = gap < opts.circle_tol;
    if (!on && gap < kLooseCircleTol) {
      const Complex mirror = 1.0 / std::conj(e.value);
      const double self = std::abs(mirror - e.value);
      on = true;
      for (const auto& f : all) {
        if (&f != &e && f.multiplicity == e.multiplicity && std::abs(f.value - mirror) <= self) on = false;
      }
    }
    if (on) {
      out.on_circle.push_back(e);
    } else {
      out.off_circle.push_back(e);
    }
  }
  std::sort(out.on_circle.begin(), out.on_circle.end(), [](const RootEntry& a, const RootEntry& b) {
    return normalize_angle(std::arg(a.value)) < normalize_angle(std::arg(b.value));
  });
  out.pairing_ok = out.roots.is_inverse_conjugate_closed(1e-6);
  return out;
}

std::vector<Complex> power_sum_check(const RootMultiset& m, int k) {
  if (k < 1) throw std::invalid_argument("power_sum_check: k must be >= 1");
  if (m.size() != 4 * k - 2) {
    throw std::invalid_argument("power_sum_check: multiset has " + std::to_string(m.size()) +
                                " elements, expected 4k-2 = " + std::to_string(4 * k - 2));
  }
  std::vector<Complex> sums;
  for (int j = 1; j <= k - 1; ++j) {
    Complex s = 0.0;
    for (const auto& e : m.entries()) s += static_cast<double>(e.multiplicity) * std::pow(e.value, 2 * j - 1);
    sums.push_back(s);
  }
  return sums;
}

std::vector<Complex> newton_power_sums(const SelfInvPoly& d, int count) {
  const auto& c = d.coeffs();
  const int m = d.degree();
  if (c[m] == Complex(0.0)) throw std::invalid_argument("newton_power_sums: leading coefficient is zero");
  std::vector<Complex> s(static_cast<std::size_t>(count) + 1, Complex(0.0));
  for (int p = 1; p <= count; ++p) {
    Complex acc = (m - p >= 0) ? static_cast<double>(p) * c[m - p] : Complex(0.0);
    for (int j = std::max(1, p - m); j < p; ++j) acc += s[j] * c[m - p + j];
    s[p] = -acc / c[m];
  }
  s.erase(s.begin());
  return s;
}

SelfInvPoly poly_from_multiset(const RootMultiset& m) {
  if (!m.is_inverse_conjugate_closed()) {
    throw std::invalid_argument("poly_from_multiset: multiset is not closed under zeta -> 1/conj(zeta)");
  }
  const auto roots = m.expanded();
  auto coeffs = poly_from_roots(roots);
  if (m.is_conjugate_closed()) {
    const double big = max_abs(coeffs);
    Complex phase = 1.0;
    for (const auto& x : coeffs) {
      if (std::abs(x) == big) {
        phase = x / big;
        break;
      }
    }
    for (auto& x : coeffs) {
      x *= std::conj(phase);
      if (std::abs(x.imag()) < 1e-10 * big) x.imag(0.0);
    }
  } else {
    // monic p satisfies z^m conj(p(1/conj z)) = w p(z) with w = prod(-conj zeta);
    // multiplying by sqrt(w) makes the relation hold with w = 1
    Complex w = 1.0;
    for (const auto& z : roots) w *= -std::conj(z);
    w /= std::abs(w);
    const Complex beta = std::sqrt(w);
    for (auto& x : coeffs) x *= beta;
  }
  return SelfInvPoly::from_coeffs(std::move(coeffs));
}

RootMultiset deform(const RootMultiset& m, double lambda, double cluster_radius) {
  if (lambda == 0.0) throw std::invalid_argument("deform: lambda must be nonzero");
  constexpr double kPairTol = 1e-6;
  std::vector<Complex> rest;
  int plus_one = 0;
  int minus_one = 0;
  for (const auto& e : m.entries()) {
    if (std::abs(e.value - 1.0) <= kPairTol) {
      plus_one += e.multiplicity;
    } else if (std::abs(e.value + 1.0) <= kPairTol) {
      minus_one += e.multiplicity;
    } else {
      rest.insert(rest.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    }
  }
  if (plus_one % 2 != 0 || minus_one % 2 != 0) {
    throw std::invalid_argument("deform: multiplicities of +1 and -1 must be even");
  }

  // pairs {zeta, 1/zeta}, represented by w = zeta + 1/zeta
  std::vector<Complex> sums;
  sums.insert(sums.end(), static_cast<std::size_t>(plus_one / 2), Complex(2.0));
  sums.insert(sums.end(), static_cast<std::size_t>(minus_one / 2), Complex(-2.0));
  std::vector<bool> used(rest.size(), false);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex target = 1.0 / rest[i];
    std::size_t best = rest.size();
    double best_dist = 0.0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(rest[j] - target);
      if (best == rest.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == rest.size() || best_dist > kPairTol * std::max(1.0, std::abs(target))) {
      throw std::invalid_argument("deform: multiset is not closed under zeta -> 1/zeta");
    }
    used[best] = true;
    const Complex partner = rest[best];
    sums.push_back(0.5 * (rest[i] + 1.0 / rest[i] + partner + 1.0 / partner));
  }

  std::vector<Complex> images;
  images.reserve(2 * sums.size());
  for (const Complex& s : sums) {
    const Complex w = lambda * s;
    const Complex disc = std::sqrt(w * w - 4.0);
    // the larger-modulus root is computed directly, the other as its inverse
    const Complex z = std::abs(w + disc) >= std::abs(w - disc) ? 0.5 * (w + disc) : 0.5 * (w - disc);
    images.push_back(z);
    images.push_back(1.0 / z);
  }
  return RootMultiset::cluster(images, cluster_radius);
}

}  // namespace bicyclic
