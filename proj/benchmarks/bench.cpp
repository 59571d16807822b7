#include <benchmark/benchmark.h>

#include <random>

#include "banachlab/gallery.hpp"
#include "banachlab/numrange.hpp"
#include "banachlab/random.hpp"
#include "banachlab/roots.hpp"

using namespace banachlab;

namespace {

Element sample_in_F(const AlgebraPtr& alg, double depth) {
  std::mt19937_64 rng(0x5EED);
  return random_in_F(alg, depth, rng);
}

void bm_norm(benchmark::State& state) {
  AlgebraPtr A = gallery::l1_cyclic(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(0x5EED);
  Element x = random_ball(A, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(norm(x));
}

void bm_multiply(benchmark::State& state) {
  AlgebraPtr A = gallery::l1_cyclic(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(0x5EED);
  Element x = random_ball(A, 1.0, rng), y = random_ball(A, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}

void bm_power_series(benchmark::State& state) {
  Element x = sample_in_F(gallery::l1_cyclic(8), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(power_series(x, 0.5));
}

void bm_power_quadrature(benchmark::State& state) {
  Element x = sample_in_F(gallery::l1_cyclic(8), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(power_balakrishnan(x, 0.5));
}

void bm_outer_body(benchmark::State& state) {
  Element x = sample_in_F(gallery::l1_semigroup4(), 0.9);
  const int rings = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(numrange_outer(x, rings, 2 * rings));
}

}  // namespace

BENCHMARK(bm_norm)->Arg(4)->Arg(8);
BENCHMARK(bm_multiply)->Arg(4)->Arg(8);
BENCHMARK(bm_power_series);
BENCHMARK(bm_power_quadrature);
BENCHMARK(bm_outer_body)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
