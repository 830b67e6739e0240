#pragma once

#include <span>
#include <vector>

#include "bicyclic/circle.hpp"
#include "bicyclic/moment_curve.hpp"

namespace bicyclic {

/// B_2k(X) = conv SM_2k(X), with vertices in the order of X.
class Polytope {
 public:
  /// Rejects k < 1 and angles closer than kAngleDedupTol. Every point is
  /// checked to be a vertex with a singleton face LP.
  static Polytope build(int k, std::span<const AnglePoint> xs);
  static Polytope build(int k, const SymmetricPointSet& xs) { return build(k, xs.points()); }

  int k() const { return k_; }
  int ambient_dim() const { return 2 * k_; }
  /// Dimension of the affine hull of the vertices.
  int affine_dim() const { return affine_dim_; }
  bool degenerate() const { return affine_dim_ < 2 * k_; }
  bool centrally_symmetric() const { return centrally_symmetric_; }

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<CurvePoint>& points() const { return points_; }
  const CurvePoint& point(int i) const { return points_[i]; }
  AnglePoint angle(int i) const { return points_[i].source_angle; }
  std::vector<AnglePoint> angles() const;

  /// Indices whose vertex certificate failed (empty for curve points).
  const std::vector<int>& non_vertices() const { return non_vertices_; }

  /// Index of the antipode of vertex i, or -1.
  int antipode_index(int i) const { return antipode_[i]; }

  /// Affine dimension of the listed vertices.
  int affine_rank(std::span<const int> subset) const;

 private:
  int k_ = 1;
  int affine_dim_ = 0;
  bool centrally_symmetric_ = false;
  std::vector<CurvePoint> points_;
  std::vector<int> antipode_;
  std::vector<int> non_vertices_;
};

}  // namespace bicyclic
