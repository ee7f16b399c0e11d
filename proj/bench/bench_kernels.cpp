// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <numeric>
#include <vector>

#include "viete/kernels.hpp"

using namespace viete;

namespace {

std::vector<int> first_k(int n) {
  std::vector<int> ks(static_cast<std::size_t>(n));
  std::iota(ks.begin(), ks.end(), 1);
  return ks;
}

const std::vector<int> kStudyBits{64, 128, 256, 512};
const std::vector<int> kUnityMs{1, 2, 3, 5};

void BM_states_serial(benchmark::State& state) {
  const auto ctx = context_new(static_cast<int>(state.range(1)));
  const auto ks = first_k(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(states_serial(ks, ctx));
}

void BM_states_parallel(benchmark::State& state) {
  const auto ctx = context_new(static_cast<int>(state.range(1)));
  const auto ks = first_k(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(states_parallel(ks, ctx));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_study_serial(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(study_grid_serial(K, kStudyBits));
}

void BM_study_parallel(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(study_grid_parallel(K, kStudyBits));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_unity_serial(benchmark::State& state) {
  const auto ctx = context_new(256);
  const auto ks = first_k(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unity_grid_serial(ks, kUnityMs, ctx));
}

void BM_unity_parallel(benchmark::State& state) {
  const auto ctx = context_new(256);
  const auto ks = first_k(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unity_grid_parallel(ks, kUnityMs, ctx));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_states_serial)->Args({64, 256})->Args({128, 1024})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_states_parallel)->Args({64, 256})->Args({128, 1024})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_study_serial)->Arg(40)->Arg(100)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_study_parallel)->Arg(40)->Arg(100)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_unity_serial)->Arg(40)->Arg(100)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_unity_parallel)->Arg(40)->Arg(100)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
