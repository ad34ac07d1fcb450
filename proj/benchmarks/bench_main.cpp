#include <benchmark/benchmark.h>

#include <random>

#include "cfk/builders.hpp"
#include "cfk/f2.hpp"
#include "cfk/homology.hpp"
#include "cfk/invariants.hpp"
#include "cfk/regions.hpp"

namespace {

cfk::f2::Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution bit(0.3);
  cfk::f2::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(cfk::f2::rank(m));
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_ExtractMaxWindow(benchmark::State& state) {
  auto c = cfk::torus(6, 7);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cfk::extract(c, {cfk::WindowKind::MaxWindow, 0, n}));
}
BENCHMARK(BM_ExtractMaxWindow)->Arg(4)->Arg(16);

void BM_InducedMap(benchmark::State& state) {
  auto c = cfk::torus(4, 5);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cfk::induced_map(cfk::chain_map_pos(c, 0, n)));
}
BENCHMARK(BM_InducedMap)->Arg(2)->Arg(8);

void BM_ProfileT29(benchmark::State& state) {
  auto c = cfk::torus(2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(cfk::profile(c, -5, 3));
}
BENCHMARK(BM_ProfileT29);

void BM_NuPlusT45(benchmark::State& state) {
  auto c = cfk::torus(4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(cfk::nu_plus(c));
}
BENCHMARK(BM_NuPlusT45);

}  // namespace

BENCHMARK_MAIN();
