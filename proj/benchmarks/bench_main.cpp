#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "arclike/contour.hpp"
#include "arclike/embed.hpp"
#include "arclike/map_io.hpp"
#include "arclike/radial.hpp"
#include "arclike/stitch.hpp"
#include "oracles.hpp"

namespace {

using namespace arclike;

std::vector<PLMap> random_maps(int segments, std::size_t n) {
  std::mt19937 rng(7);
  std::vector<PLMap> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(oracle::random_map(rng, segments));
  return out;
}

PLMap minc() { return load_map_file(ARCLIKE_DATA_DIR "/maps/minc.json").map; }

void BM_Compose(benchmark::State& state) {
  const auto maps = random_maps(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(maps[i % 64], maps[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(10)->Arg(40);

void BM_RadialContourFactor(benchmark::State& state) {
  const auto maps = random_maps(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(radial_contour_factor(maps[i++ % 64]));
}
BENCHMARK(BM_RadialContourFactor)->Arg(4)->Arg(10)->Arg(40);

void BM_RadialProfile(benchmark::State& state) {
  const auto maps = random_maps(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(radial_profile(maps[i++ % 64]));
}
BENCHMARK(BM_RadialProfile)->Arg(4)->Arg(10)->Arg(40);

void BM_ContourEquivalent(benchmark::State& state) {
  const auto maps = random_maps(10, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contour_equivalent(right_half(maps[i % 64]), right_half(maps[(i + 3) % 64])));
    ++i;
  }
}
BENCHMARK(BM_ContourEquivalent);

void BM_StitchMinc(benchmark::State& state) {
  const PLMap m = minc();
  for (auto _ : state) {
    const StitchResult r = stitched_factor(m, m);
    benchmark::DoNotOptimize(verify_stitch(r, m));
  }
}
BENCHMARK(BM_StitchMinc);

void BM_EmbedMinc(benchmark::State& state) {
  const std::size_t stages = static_cast<std::size_t>(state.range(0));
  const std::vector<PLMap> maps(2 * stages + 1, minc());
  const auto derived = reindex_system(maps).derived;
  std::vector<Rational> eps;
  for (std::size_t k = 0; k < stages; ++k) eps.push_back(Rational(1, 20 << (2 * k)));
  for (auto _ : state) benchmark::DoNotOptimize(build_embedding(derived, stages, eps));
}
BENCHMARK(BM_EmbedMinc)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
