#include "bicyclic/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bicyclic/errors.hpp"

namespace bicyclic {
namespace {

using VertexSet = std::vector<int>;

// Runs fn(i) for i in [0, count) on `threads` workers; rethrows the first error.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
          return;
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

// Joins sorted (s-1)-sets sharing their first s-2 entries; keeps a union only
// if all of its (s-1)-subsets are present.
std::vector<VertexSet> next_candidates(const std::vector<VertexSet>& level) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const auto& a = level[i];
      const auto& b = level[j];
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
      VertexSet cand = a;
      cand.push_back(b.back());
      bool ok = true;
      for (std::size_t drop = 0; drop + 2 < cand.size() && ok; ++drop) {
        VertexSet sub;
        for (std::size_t q = 0; q < cand.size(); ++q) {
          if (q != drop) sub.push_back(cand[q]);
        }
        ok = std::binary_search(level.begin(), level.end(), sub);
      }
      if (ok) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace

FaceCensus enumerate_faces(const Polytope& p, const CensusOptions& opts) {
  if (opts.cap < 1) throw std::invalid_argument("enumerate_faces: cap must be >= 1");
  const int n = p.size();
  const int d = p.ambient_dim();
  if (n < 2) throw std::invalid_argument("enumerate_faces: need at least two points");

  FaceCensus census;
  census.n = n;
  census.k = p.k();
  census.cap = opts.cap;

  std::map<VertexSet, int> found;  // face -> dimension
  std::vector<VertexSet> level;
  for (int i = 0; i < n; ++i) level.push_back({i});
  int completed_size = 0;
  for (int size = 1; size <= opts.cap && !level.empty(); ++size) {
    if (census.lp_calls + static_cast<long long>(level.size()) > opts.max_lp_calls) {
      census.partial = true;
      break;
    }
    std::vector<VertexSet> minimal(level.size());
    parallel_for(level.size(), opts.threads, [&](std::size_t i) { minimal[i] = minimal_face(p, level[i], opts.lp); });
    census.lp_calls += static_cast<long long>(level.size());

    std::vector<VertexSet> feasible;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (static_cast<int>(minimal[i].size()) == n) continue;
      feasible.push_back(level[i]);
      found.emplace(minimal[i], -1);
    }
    completed_size = size;
    if (size < opts.cap) level = next_candidates(feasible);
  }
  // every j-face is the minimal face of j + 1 affinely independent vertices
  census.complete_through_dim = std::min(completed_size - 1, d - 1);

  std::vector<VertexSet> keys;
  keys.reserve(found.size());
  for (auto& [face, dim] : found) {
    dim = p.affine_rank(face);
    keys.push_back(face);
  }
  std::vector<std::optional<FaceCertificate>> certs(keys.size());
  if (opts.certify) {
    parallel_for(keys.size(), opts.threads, [&](std::size_t i) {
      certs[i] = is_face(p, keys[i], opts.lp);
      if (!certs[i]) {
        throw NumericalError("enumerate_faces: minimal face failed its face certificate");
      }
    });
    census.lp_calls += static_cast<long long>(keys.size());
  }

  census.faces.assign(static_cast<std::size_t>(d), {});
  census.f_vector.assign(static_cast<std::size_t>(d) + 1, 0);
  census.f_vector[0] = 1;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const int dim = found[keys[i]];
    if (dim < 0 || dim >= d) continue;
    census.faces[dim].push_back({keys[i], dim, std::move(certs[i])});
    ++census.f_vector[dim + 1];
  }
  return census;
}

double edge_density(const FaceCensus& census) {
  if (census.complete_through_dim < 1) throw std::invalid_argument("edge_density: census does not cover edges");
  const double pairs = 0.5 * census.n * (census.n - 1);
  return static_cast<double>(census.f(1)) / pairs;
}

double edge_density(const Polytope& p, const CensusOptions& opts) {
  CensusOptions o = opts;
  o.cap = std::max(o.cap, 2);
  return edge_density(enumerate_faces(p, o));
}

}  // namespace bicyclic
