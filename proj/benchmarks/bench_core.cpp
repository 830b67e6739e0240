#include <benchmark/benchmark.h>

#include <random>

#include "bicyclic/census.hpp"
#include "bicyclic/face_oracle.hpp"
#include "bicyclic/roots.hpp"
#include "bicyclic/self_inversive.hpp"
#include "bicyclic/trig_poly.hpp"

using namespace bicyclic;

static void BM_LpRandomBoxed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LinearProgram lp(n);
  std::vector<double> c(n);
  for (auto& v : c) v = u(rng);
  lp.set_objective(c);
  for (int i = 0; i < 2 * n; ++i) {
    std::vector<double> a(n);
    for (auto& v : a) v = u(rng);
    lp.add_constraint(a, Relation::less_equal, 1.0);
  }
  for (int j = 0; j < n; ++j) lp.set_bounds(j, -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(lp));
}
BENCHMARK(BM_LpRandomBoxed)->Arg(8)->Arg(32)->Arg(64);

static void BM_IsFaceEdge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = Polytope::build(2, equally_spaced(n));
  const int pair[] = {0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(is_face(p, pair));
}
BENCHMARK(BM_IsFaceEdge)->Arg(12)->Arg(36)->Arg(96);

static void BM_CensusB4(benchmark::State& state) {
  const auto p = Polytope::build(2, equally_spaced(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_faces(p));
  state.SetLabel("cap 3");
}
BENCHMARK(BM_CensusB4)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_BodyCertificate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const AnglePoint pair[] = {AnglePoint(-0.6), AnglePoint(0.6)};
  for (auto _ : state) benchmark::DoNotOptimize(body_face_certificate(k, pair));
}
BENCHMARK(BM_BodyCertificate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SelfInversiveRoots(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RakedTrigPoly a = RakedTrigPoly::zero(k);
  a.c = u(rng);
  for (int j = 0; j < k; ++j) {
    a.a[j] = u(rng);
    a.b[j] = u(rng);
  }
  const auto d = trig_to_selfinv(a);
  for (auto _ : state) benchmark::DoNotOptimize(selfinv_roots(d));
}
BENCHMARK(BM_SelfInversiveRoots)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
