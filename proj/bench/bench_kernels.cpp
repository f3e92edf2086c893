// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to pick the thread count.

#include <benchmark/benchmark.h>

#include <random>

#include "crystcohom/catalog.hpp"
#include "crystcohom/cohomology.hpp"
#include "crystcohom/linalg.hpp"
#include "crystcohom/wall_resolution.hpp"

using namespace crystcohom;

namespace {

MatrixZ random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  MatrixZ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_Smith(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(1)), static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_diagonal(m, exec_of(state)));
}
BENCHMARK(BM_Smith)->ArgsProduct({{0, 1}, {40, 80}})->Unit(benchmark::kMillisecond);

void BM_WallResolution(benchmark::State& state) {
  const auto h = find_catalog_entry("min.82-1.7").action();
  for (auto _ : state) {
    const WallResolution res(h, static_cast<std::size_t>(state.range(1)), exec_of(state));
    benchmark::DoNotOptimize(res.rechecked_count());
  }
}
BENCHMARK(BM_WallResolution)->ArgsProduct({{0, 1}, {7, 9}})->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& state) {
  const auto h = find_catalog_entry("Z12^(6)").action();
  CohomologyOptions options;
  options.exec = exec_of(state);
  options.periodic_tail = false;
  for (auto _ : state) benchmark::DoNotOptimize(gamma_cohomology(h, static_cast<std::size_t>(state.range(1)), options));
}
BENCHMARK(BM_Cohomology)->ArgsProduct({{0, 1}, {5}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
