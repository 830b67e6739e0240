#include "bicyclic/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace bicyclic {

std::vector<std::vector<int>> HullFixture::faces_of_dim(int dim) const {
  if (dims.size() != faces.size()) throw std::runtime_error("fixture has no dimension data");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (dims[i] == dim) out.push_back(faces[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HullFixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed fixture " + path.string() + ": " + e.what());
  }
  HullFixture fx;
  try {
    fx.n = j.at("n").get<int>();
    fx.k = j.at("k").get<int>();
    fx.faces = j.at("faces").get<std::vector<std::vector<int>>>();
    fx.curve = j.value("curve", fx.curve);
    fx.affine_dim = j.value("affine_dim", -1);
    fx.dims = j.value("dims", std::vector<int>{});
    fx.f_vector = j.value("f_vector", std::vector<long long>{});
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("fixture " + path.string() + " lacks required fields: " + e.what());
  }
  for (auto& f : fx.faces) {
    std::sort(f.begin(), f.end());
    for (int v : f) {
      if (v < 0 || v >= fx.n) throw std::runtime_error("fixture " + path.string() + ": vertex index out of range");
    }
  }
  return fx;
}

std::optional<std::filesystem::path> fixtures_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return std::filesystem::path(*explicit_dir);
  if (const char* env = std::getenv("BICYCLIC_FIXTURES"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::string fixture_name(int k, int n) { return "b" + std::to_string(2 * k) + "_n" + std::to_string(n) + ".json"; }

}  // namespace bicyclic
