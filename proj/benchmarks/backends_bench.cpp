#include <benchmark/benchmark.h>


#include "rtfr/backend.hpp"
#include "rtfr/forces.hpp"
#include "rtfr/grid.hpp"
#include "rtfr/layout.hpp"
#include "rtfr/lbvh.hpp"
#include "rtfr/rayquery.hpp"

namespace {

using namespace rtfr;

Layout uniform_points(std::size_t n) { return init_layout(n, 100.0, 42); }

void repulsive_phase(benchmark::State& state, BackendId id) {
  const Layout pts = uniform_points(static_cast<std::size_t>(state.range(0)));
  const double k = compute_k(pts);
  auto backend = make_backend(id);
  std::vector<Vec2> disp(pts.size());
  for (auto _ : state) {
    std::fill(disp.begin(), disp.end(), Vec2{});
    backend->compute(pts, k, disp);
    benchmark::DoNotOptimize(disp.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_NaiveCutoff(benchmark::State& s) { repulsive_phase(s, BackendId::naive_cutoff); }
void BM_Grid(benchmark::State& s) { repulsive_phase(s, BackendId::grid); }
void BM_Lbvh(benchmark::State& s) { repulsive_phase(s, BackendId::lbvh); }
void BM_RayQuery(benchmark::State& s) { repulsive_phase(s, BackendId::rayquery); }

BENCHMARK(BM_NaiveCutoff)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(BM_Grid)->RangeMultiplier(4)->Range(256, 1 << 18)->Complexity();
BENCHMARK(BM_Lbvh)->RangeMultiplier(4)->Range(256, 1 << 18)->Complexity();
BENCHMARK(BM_RayQuery)->RangeMultiplier(4)->Range(256, 1 << 18)->Complexity();

void BM_LbvhBuild(benchmark::State& state) {
  const Layout pts = uniform_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_point_lbvh(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LbvhBuild)->RangeMultiplier(4)->Range(256, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_DiscBvhBuild(benchmark::State& state) {
  const Layout pts = uniform_points(static_cast<std::size_t>(state.range(0)));
  const double r = 2.0 * compute_k(pts);
  for (auto _ : state) benchmark::DoNotOptimize(build_disc_bvh(pts, r));
}
BENCHMARK(BM_DiscBvhBuild)->RangeMultiplier(4)->Range(256, 1 << 18);

void BM_GridBuild(benchmark::State& state) {
  const Layout pts = uniform_points(static_cast<std::size_t>(state.range(0)));
  const double r = 2.0 * compute_k(pts);
  for (auto _ : state) benchmark::DoNotOptimize(build_grid(pts, r));
}
BENCHMARK(BM_GridBuild)->RangeMultiplier(4)->Range(256, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
