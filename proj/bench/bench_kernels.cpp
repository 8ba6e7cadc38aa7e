#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "silpose/bank.hpp"
#include "silpose/kernels.hpp"

using namespace silpose;

namespace {

const CameraIntrinsics kCam = CameraIntrinsics::ycb_video();

const TriangleMesh& mesh() {
  static const TriangleMesh m = primitives::bracket();
  return m;
}

const std::vector<Quaternion>& grid() {
  static const std::vector<Quaternion> g = icosphere_grid(1, 12);
  return g;
}

const std::vector<SilhouetteMask>& templates() {
  static const std::vector<SilhouetteMask> t = [] {
    const auto g = icosphere_grid(2, 24);
    return kernels::render_silhouettes(mesh(), g, kCam, render_distance(mesh(), kCam), {});
  }();
  return t;
}

std::vector<Vec3> cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0, 0.03);
  std::vector<Vec3> pts(n);
  for (auto& p : pts) p = {g(rng), g(rng), g(rng)};
  return pts;
}

void BM_ScoreSerial(benchmark::State& state) {
  const auto& t = templates();
  std::vector<double> scores(t.size());
  for (auto _ : state) {
    kernels::score_templates_serial(t[100], t, scores);
    benchmark::DoNotOptimize(scores.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size()));
}

void BM_ScoreOmp(benchmark::State& state) {
  const auto& t = templates();
  std::vector<double> scores(t.size());
  for (auto _ : state) {
    kernels::score_templates_omp(t[100], t, scores);
    benchmark::DoNotOptimize(scores.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size()));
}

void BM_RenderSerial(benchmark::State& state) {
  const double r = render_distance(mesh(), kCam);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::render_silhouettes_serial(mesh(), grid(), kCam, r, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid().size()));
}

void BM_RenderOmp(benchmark::State& state) {
  const double r = render_distance(mesh(), kCam);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::render_silhouettes_omp(mesh(), grid(), kCam, r, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid().size()));
}

void BM_NearestSerial(benchmark::State& state) {
  const auto q = cloud(state.range(0), 1), p = cloud(state.range(0), 2);
  std::vector<double> out(q.size());
  for (auto _ : state) {
    kernels::nearest_distances_serial(q, p, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_NearestOmp(benchmark::State& state) {
  const auto q = cloud(state.range(0), 1), p = cloud(state.range(0), 2);
  std::vector<double> out(q.size());
  for (auto _ : state) {
    kernels::nearest_distances_omp(q, p, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_NearestGrid(benchmark::State& state) {
  const auto q = cloud(state.range(0), 1), p = cloud(state.range(0), 2);
  std::vector<double> out(q.size());
  for (auto _ : state) {
    kernels::nearest_distances_grid(q, p, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_ScoreSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ScoreOmp)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RenderSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestSerial)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestOmp)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestGrid)->Arg(1000)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
