#include <benchmark/benchmark.h>

#include <random>

#include "cotv/pairing.hpp"
#include "cotv/ratlin.hpp"
#include "cotv/toricoracle.hpp"

#ifdef COTV_BENCH_RANDOM
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#endif

namespace {

cotv::IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-20, 20);
  cotv::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cotv::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_IntegerKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(n, 9);
  cotv::IntMatrix wide(n / 2, n);
  for (std::size_t i = 0; i < n / 2; ++i)
    for (std::size_t j = 0; j < n; ++j) wide(i, j) = m(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(cotv::integer_kernel(wide));
}
BENCHMARK(BM_IntegerKernel)->Arg(8)->Arg(16);

#ifdef COTV_BENCH_RANDOM

void BM_HirzebruchTop(benchmark::State& state) {
  const auto h = cotv::testing::hirzebruch();
  for (auto _ : state) benchmark::DoNotOptimize(cotv::top_intersection(h.df, h.h));
}
BENCHMARK(BM_HirzebruchTop);

void BM_PairRandom(benchmark::State& state) {
  const auto& pool = cotv::testing::instance_pool();
  cotv::testing::Rng rng(42);
  const auto& inst = pool[static_cast<std::size_t>(state.range(0)) % pool.size()];
  const auto h = cotv::testing::random_sf(rng, inst);
  const auto c = cotv::fundamental_weight(inst.df);
  for (auto _ : state) benchmark::DoNotOptimize(cotv::pair(inst.df, h, c));
}
BENCHMARK(BM_PairRandom)->DenseRange(0, 3);

void BM_WeightBasis(benchmark::State& state) {
  const auto& inst = cotv::testing::instance_pool()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(cotv::weight_basis(inst.df, 1));
}
BENCHMARK(BM_WeightBasis)->DenseRange(0, 3);

void BM_ToricOracleTop(benchmark::State& state) {
  const auto h = cotv::testing::hirzebruch();
  const auto hf = cotv::homogenize_fan(h.df);
  const auto f = cotv::transport(h.df, hf, h.h);
  for (auto _ : state) benchmark::DoNotOptimize(cotv::toric_intersection(hf.fan, {f, f}));
}
BENCHMARK(BM_ToricOracleTop);

#endif

}  // namespace

BENCHMARK_MAIN();
