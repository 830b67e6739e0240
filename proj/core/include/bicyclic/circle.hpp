#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace bicyclic {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Two angles closer than this (in arc distance) are treated as the same point.
inline constexpr double kAngleDedupTol = 1e-10;

/// A point of S^1 = R / 2piZ, stored as its representative in [0, 2pi).
class AnglePoint {
 public:
  constexpr AnglePoint() = default;
  explicit AnglePoint(double theta);

  double theta() const { return theta_; }
  AnglePoint antipode() const { return AnglePoint(theta_ + kPi); }
  AnglePoint rotated(double tau) const { return AnglePoint(theta_ + tau); }

  friend bool operator==(const AnglePoint&, const AnglePoint&) = default;
  friend auto operator<=>(const AnglePoint&, const AnglePoint&) = default;

 private:
  double theta_ = 0.0;
};

/// Canonical representative of t in [0, 2pi).
double normalize_angle(double t);

/// Length of the shorter arc between a and b, in [0, pi].
double arc_distance(AnglePoint a, AnglePoint b);

/// Closed arc of S^1 running counter-clockwise from `start` for `length`.
struct Arc {
  AnglePoint start;
  double length = 0.0;

  bool contains(AnglePoint t, double slack = 0.0) const;
  Arc shifted(double tau) const { return {start.rotated(tau), length}; }
};

/// Shortest closed arc containing all of `points` (2pi minus the largest gap).
Arc covering_arc(std::span<const AnglePoint> points);

/// A finite subset of S^1 closed under t -> t + pi, sorted by angle.
class SymmetricPointSet {
 public:
  /// Validates distinctness and antipodal closure; throws std::invalid_argument.
  explicit SymmetricPointSet(std::vector<AnglePoint> points);

  const std::vector<AnglePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const AnglePoint& operator[](std::size_t i) const { return points_[i]; }

  /// Index of the antipode of point i.
  std::size_t antipode_index(std::size_t i) const;

 private:
  std::vector<AnglePoint> points_;
};

/// The n points 2pi j / n; n must be even and positive.
SymmetricPointSet equally_spaced(int n);

/// Y union (Y + pi), sorted; rejects inputs whose union has near-coincident points.
SymmetricPointSet symmetrize(std::span<const AnglePoint> ys);

std::vector<AnglePoint> to_angles(std::span<const double> thetas);

}  // namespace bicyclic
