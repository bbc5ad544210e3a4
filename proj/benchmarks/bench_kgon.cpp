#include <benchmark/benchmark.h>

#include "csest/estimators.hpp"
#include "csest/sampling.hpp"

namespace {

using namespace csest;

void BM_min_kgon_square(benchmark::State& state) {
  const auto pts = sample_planar(SupportSpec::polygon(geom2d::unit_square()),
                                 static_cast<std::size_t>(state.range(0)), {3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(min_kgon(pts, 4));
}
BENCHMARK(BM_min_kgon_square)->Arg(250)->Arg(1000)->Arg(4000)->Unit(benchmark::kMicrosecond);

void BM_min_kgon_disk(benchmark::State& state) {
  const auto pts = sample_planar(SupportSpec::disk({0, 0}, 1.0), 1000, {5, 0});
  const auto r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_kgon(pts, r));
}
BENCHMARK(BM_min_kgon_disk)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_adaptive_disk(benchmark::State& state) {
  const auto pts = sample_planar(SupportSpec::disk({0, 0}, 1.0),
                                 static_cast<std::size_t>(state.range(0)), {11, 0});
  for (auto _ : state) benchmark::DoNotOptimize(adaptive(pts, AdaptiveConfig{}));
}
BENCHMARK(BM_adaptive_disk)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
