#include "bicyclic/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bicyclic {

double normalize_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can return a value that rounds up to 2pi after the shift above
  if (r >= kTwoPi) r = 0.0;
  return r;
}

AnglePoint::AnglePoint(double theta) : theta_(normalize_angle(theta)) {}

double arc_distance(AnglePoint a, AnglePoint b) {
  const double d = std::abs(a.theta() - b.theta());
  return std::min(d, kTwoPi - d);
}

bool Arc::contains(AnglePoint t, double slack) const {
  const double offset = normalize_angle(t.theta() - start.theta() + slack);
  return offset <= length + 2.0 * slack;
}

Arc covering_arc(std::span<const AnglePoint> points) {
  if (points.empty()) throw std::invalid_argument("covering_arc: empty point list");
  std::vector<double> ts;
  ts.reserve(points.size());
  for (const auto& p : points) ts.push_back(p.theta());
  std::sort(ts.begin(), ts.end());
  // the largest gap between consecutive angles is the complement of the arc
  double best_gap = ts.front() + kTwoPi - ts.back();
  std::size_t best_end = 0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double gap = ts[i + 1] - ts[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_end = i + 1;
    }
  }
  return {AnglePoint(ts[best_end]), kTwoPi - best_gap};
}

SymmetricPointSet::SymmetricPointSet(std::vector<AnglePoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  const std::size_t n = points_.size();
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("SymmetricPointSet: size must be positive and even, got " +
                                std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& next = points_[(i + 1) % n];
    if (n > 1 && arc_distance(points_[i], next) < kAngleDedupTol) {
      throw std::invalid_argument("SymmetricPointSet: near-coincident points");
    }
  }
  for (std::size_t i = 0; i < n; ++i) (void)antipode_index(i);
}

std::size_t SymmetricPointSet::antipode_index(std::size_t i) const {
  const AnglePoint target = points_.at(i).antipode();
  auto it = std::lower_bound(points_.begin(), points_.end(), target);
  // check the neighbours on both sides, with wraparound at 0 / 2pi
  const std::size_t n = points_.size();
  const std::size_t hi = static_cast<std::size_t>(it - points_.begin()) % n;
  const std::size_t lo = (hi + n - 1) % n;
  for (std::size_t j : {hi, lo}) {
    if (arc_distance(points_[j], target) < kAngleDedupTol) return j;
  }
  throw std::invalid_argument("SymmetricPointSet: point set is not closed under antipodes");
}

SymmetricPointSet equally_spaced(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("equally_spaced: n must be even and >= 2, got " + std::to_string(n));
  }
  std::vector<AnglePoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) pts.emplace_back(kTwoPi * j / n);
  return SymmetricPointSet(std::move(pts));
}

SymmetricPointSet symmetrize(std::span<const AnglePoint> ys) {
  if (ys.empty()) throw std::invalid_argument("symmetrize: empty input");
  std::vector<AnglePoint> pts;
  pts.reserve(2 * ys.size());
  for (const auto& y : ys) {
    pts.push_back(y);
    pts.push_back(y.antipode());
  }
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (arc_distance(pts[i], pts[(i + 1) % pts.size()]) < kAngleDedupTol) {
      throw std::invalid_argument("symmetrize: points of Y u (Y + pi) coincide");
    }
  }
  return SymmetricPointSet(std::move(pts));
}

std::vector<AnglePoint> to_angles(std::span<const double> thetas) {
  std::vector<AnglePoint> out;
  out.reserve(thetas.size());
  for (double t : thetas) out.emplace_back(t);
  return out;
}

}  // namespace bicyclic
