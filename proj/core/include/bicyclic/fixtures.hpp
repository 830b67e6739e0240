#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bicyclic {

/// Face lattice of a convex hull computed offline, one JSON file per instance:
/// {"n", "k", "faces": [[vertex indices]]} plus optional "curve", "dims",
/// "affine_dim", "f_vector".
struct HullFixture {
  int n = 0;
  int k = 0;
  std::string curve = "symmetric_moment";
  int affine_dim = -1;
  std::vector<std::vector<int>> faces;  // each sorted
  std::vector<int> dims;                // parallel to faces when present
  std::vector<long long> f_vector;      // f_0 .. f_{dim-1}

  /// Faces with exactly `dim` dimension (requires dims).
  std::vector<std::vector<int>> faces_of_dim(int dim) const;
};

HullFixture load_fixture(const std::filesystem::path& path);

/// Explicit directory if given, otherwise $BICYCLIC_FIXTURES; nullopt if neither.
std::optional<std::filesystem::path> fixtures_dir(const std::optional<std::string>& explicit_dir);

/// "b<2k>_n<n>.json"
std::string fixture_name(int k, int n);

}  // namespace bicyclic
