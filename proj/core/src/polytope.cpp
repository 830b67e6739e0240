#include "bicyclic/polytope.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "bicyclic/face_oracle.hpp"

namespace bicyclic {
namespace {

constexpr double kRankTol = 1e-9;

}  // namespace

Polytope Polytope::build(int k, std::span<const AnglePoint> xs) {
  if (k < 1) throw std::invalid_argument("Polytope: k must be >= 1");
  if (xs.empty()) throw std::invalid_argument("Polytope: empty point set");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (arc_distance(xs[i], xs[j]) < kAngleDedupTol) {
        throw std::invalid_argument("Polytope: duplicate angle at positions " + std::to_string(i) + " and " +
                                    std::to_string(j));
      }
    }
  }
  Polytope p;
  p.k_ = k;
  p.points_.reserve(xs.size());
  for (const auto& t : xs) p.points_.push_back(sm_eval(k, t));

  const int n = p.size();
  p.antipode_.assign(static_cast<std::size_t>(n), -1);
  bool symmetric = true;
  for (int i = 0; i < n; ++i) {
    const AnglePoint opposite = xs[i].antipode();
    for (int j = 0; j < n; ++j) {
      if (arc_distance(xs[j], opposite) < kAngleDedupTol) {
        p.antipode_[i] = j;
        break;
      }
    }
    if (p.antipode_[i] < 0) symmetric = false;
  }
  p.centrally_symmetric_ = symmetric;

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  p.affine_dim_ = p.affine_rank(all);

  if (n > 1) {
    for (int i = 0; i < n; ++i) {
      const int single[] = {i};
      if (!is_face(p, single)) p.non_vertices_.push_back(i);
    }
  }
  return p;
}

std::vector<AnglePoint> Polytope::angles() const {
  std::vector<AnglePoint> out;
  out.reserve(points_.size());
  for (const auto& pt : points_) out.push_back(pt.source_angle);
  return out;
}

int Polytope::affine_rank(std::span<const int> subset) const {
  if (subset.size() <= 1) return subset.empty() ? -1 : 0;
  Eigen::MatrixXd diff(2 * k_, static_cast<Eigen::Index>(subset.size() - 1));
  const auto& base = points_[subset[0]].coords;
  for (std::size_t j = 1; j < subset.size(); ++j) diff.col(j - 1) = points_[subset[j]].coords - base;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(diff);
  lu.setThreshold(kRankTol);
  return static_cast<int>(lu.rank());
}

}  // namespace bicyclic
