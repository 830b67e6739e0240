#pragma once

#include <optional>
#include <vector>

#include "bicyclic/face_oracle.hpp"
#include "bicyclic/lp.hpp"
#include "bicyclic/polytope.hpp"

namespace bicyclic {

struct CensusOptions {
  /// Largest candidate subset size.
  int cap = 3;
  /// LP budget; exceeding it stops the census and marks it partial.
  long long max_lp_calls = 2'000'000;
  int threads = 1;
  /// Attach an is_face certificate to every face found.
  bool certify = true;
  LpOptions lp;
};

struct Face {
  std::vector<int> vertices;  // sorted
  int dimension = -1;
  std::optional<FaceCertificate> certificate;
};

struct FaceCensus {
  int n = 0;
  int k = 0;
  int cap = 0;
  /// faces[j] lists the j-faces found, sorted by vertex set.
  std::vector<std::vector<Face>> faces;
  /// f[0] = f_{-1} = 1, f[j + 1] = number of j-faces found.
  std::vector<long long> f_vector;
  /// f_j is exact for every j <= complete_through_dim; higher entries are
  /// lower bounds.
  int complete_through_dim = -1;
  bool partial = false;
  long long lp_calls = 0;

  long long f(int j) const { return f_vector.at(static_cast<std::size_t>(j) + 1); }
};

/// Breadth-first over subset sizes 1..cap. A subset is examined only when all
/// of its one-smaller subsets lie in a common proper face; each examined subset
/// contributes the minimal face containing it.
FaceCensus enumerate_faces(const Polytope& p, const CensusOptions& opts = {});

/// f_1 / C(n, 2).
double edge_density(const FaceCensus& census);
double edge_density(const Polytope& p, const CensusOptions& opts = {});

}  // namespace bicyclic
