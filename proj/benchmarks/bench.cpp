#include <benchmark/benchmark.h>

#include <random>

#include "facenum/face_ring.hpp"
#include "facenum/generators.hpp"
#include "facenum/homology.hpp"
#include "facenum/matrix.hpp"

using namespace facenum;

static void BM_RankDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto field = FieldSpec::prime(65537);
  std::mt19937_64 rng(1);
  MatrixOverField m(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, field.random(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankDense)->Arg(32)->Arg(128)->Arg(256);

static void BM_BettiCP2(benchmark::State& state) {
  const auto c = fixtures::cp2_9();
  const auto field = FieldSpec::prime(2);
  for (auto _ : state) benchmark::DoNotOptimize(betti(c, field));
}
BENCHMARK(BM_BettiCP2);

static void BM_BettiKuhnelLassman(benchmark::State& state) {
  const auto c = kuhnel_lassman(static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)) - 1);
  const auto field = FieldSpec::prime(2);
  for (auto _ : state) benchmark::DoNotOptimize(betti(c, field));
}
BENCHMARK(BM_BettiKuhnelLassman)->Arg(4)->Arg(5)->Arg(6);

static void BM_ArtinianTorus(benchmark::State& state) {
  const auto c = fixtures::torus_7();
  const auto field = FieldSpec::prime(65537);
  for (auto _ : state) benchmark::DoNotOptimize(artinian_reduction(c, field, 7).dims);
}
BENCHMARK(BM_ArtinianTorus);

BENCHMARK_MAIN();
