#include <benchmark/benchmark.h>

#include "dustbench/color.hpp"
#include "dustbench/fsim.hpp"
#include "dustbench/kmeans.hpp"
#include "dustbench/metrics.hpp"
#include "dustbench/scatter.hpp"
#include "dustbench/scenes.hpp"

namespace {

using namespace dustbench;

const ScatterParams& params() {
  static const ScatterParams p(parse_hex("#C89463"), 0.5);
  return p;
}

void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Scene scene = make_gradient_scene(n, n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize(scene.clear, scene.depth, params()));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Synthesize)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Ssim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Scene scene = make_gradient_scene(n, n, 2);
  const ImageRGB test = synthesize(scene.clear, scene.depth, params()).image;
  for (auto _ : state) benchmark::DoNotOptimize(ssim(test, scene.clear));
}
BENCHMARK(BM_Ssim)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Fsim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Scene scene = make_gradient_scene(n, n, 3);
  const ImageRGB test = synthesize(scene.clear, scene.depth, params()).image;
  for (auto _ : state) benchmark::DoNotOptimize(fsim(test, scene.clear));
}
BENCHMARK(BM_Fsim)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_KMeans(benchmark::State& state) {
  const Scene scene = make_outdoor_scene(256, 192, 4);
  const std::vector<Lab> samples = sample_pixels(rgb_to_lab(scene.clear), 20000, 4);
  KMeansOptions opts;
  opts.k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kmeans_lab(samples, opts));
}
BENCHMARK(BM_KMeans)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
