#include <benchmark/benchmark.h>

#include "csest/geom2d.hpp"
#include "csest/sampling.hpp"

namespace {

using namespace csest;

void BM_convex_hull(benchmark::State& state) {
  const auto pts = sample_planar(SupportSpec::disk({0, 0}, 1.0),
                                 static_cast<std::size_t>(state.range(0)), {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(geom2d::convex_hull(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_convex_hull)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_symm_diff(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const auto p = geom2d::regular_polygon(m, 1.0);
  const auto q = geom2d::regular_polygon(m, 1.0, {0.1, 0.05}, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(geom2d::symm_diff_area(p, q));
}
BENCHMARK(BM_symm_diff)->Arg(4)->Arg(16)->Arg(64);

void BM_disk_intersection(benchmark::State& state) {
  const auto p = geom2d::regular_polygon(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(geom2d::disk_intersection_area(p, {0.2, 0}, 0.95));
}
BENCHMARK(BM_disk_intersection)->Arg(8)->Arg(64);

void BM_sample_polygon(benchmark::State& state) {
  const auto spec = SupportSpec::polygon(geom2d::regular_polygon(12, 0.5, {0.5, 0.5}));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_planar(spec, 1000, {7, stream++}));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_sample_polygon);

}  // namespace
