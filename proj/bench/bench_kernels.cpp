#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pixnav/nn/kernels.hpp"
#include "pixnav/sim/render.hpp"

using namespace pixnav;
namespace k = pixnav::nn::kernels;

namespace {

std::vector<float> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

template <bool Parallel>
void BM_Gemm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_vector(static_cast<std::size_t>(n) * n, 1);
  const auto b = random_vector(static_cast<std::size_t>(n) * n, 2);
  std::vector<float> c(static_cast<std::size_t>(n) * n);
  for (auto _ : state) {
    if constexpr (Parallel)
      k::gemm(k::Trans::No, k::Trans::No, n, n, n, 1.0f, a.data(), n, b.data(), n, 0.0f, c.data(), n);
    else
      k::gemm_reference(k::Trans::No, k::Trans::No, n, n, n, 1.0f, a.data(), n, b.data(), n, 0.0f, c.data(), n);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * 2LL * n * n * n);
}

// Desk-preset stem: 4 channels, 120 x 160, 4 x 4 stride 4, batch of 16 frames.
template <bool Parallel>
void BM_Im2col(benchmark::State& state) {
  const k::ConvGeometry g{4, 120, 160, 4, 4, 0};
  const int count = 16;
  const auto images = random_vector(static_cast<std::size_t>(count) * 4 * 120 * 160, 3);
  std::vector<float> col(static_cast<std::size_t>(g.patch()) * count * g.out_height() * g.out_width());
  for (auto _ : state) {
    if constexpr (Parallel)
      k::im2col(g, count, images.data(), col.data());
    else
      k::im2col_reference(g, count, images.data(), col.data());
    benchmark::DoNotOptimize(col.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<long long>(col.size() * sizeof(float)));
}

template <bool Parallel>
void BM_Render(benchmark::State& state) {
  static const sim::World world = sim::generate_world(1000);
  sim::Pose pose;
  for (int i = 0; i < world.width * world.height; ++i) {
    const sim::CellIndex c{i % world.width, i / world.width};
    if (world.is_free(c) && world.room_labels[world.index(c)] >= 0) {
      pose = {world.cell_center(c).x, world.cell_center(c).y, 30, 0};
      break;
    }
  }
  const sim::Camera cam;
  for (auto _ : state) {
    sim::Frame f = Parallel ? sim::render(world, pose, cam) : sim::render_reference(world, pose, cam);
    benchmark::DoNotOptimize(f.rgb.data());
  }
  state.SetItemsProcessed(state.iterations() * cam.width * cam.height_px);
}

}  // namespace

BENCHMARK(BM_Gemm<false>)->Name("gemm/serial")->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gemm<true>)->Name("gemm/openmp")->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Im2col<false>)->Name("im2col/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Im2col<true>)->Name("im2col/openmp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Render<false>)->Name("render/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Render<true>)->Name("render/openmp")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
