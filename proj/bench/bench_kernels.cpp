// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "k3/classify.hpp"
#include "k3/equivalence.hpp"
#include "k3/point_solutions.hpp"

namespace {

k3::Exec exec_of(const benchmark::State& state) { return state.range(0) ? k3::Exec::Parallel : k3::Exec::Serial; }

void BM_VerifyEquivalence16(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k3::verify_equivalence(16, 6, 3, exec_of(state)));
}
BENCHMARK(BM_VerifyEquivalence16)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyEquivalence16Wide(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k3::verify_equivalence(16, 8, 3, exec_of(state)));
}
BENCHMARK(BM_VerifyEquivalence16Wide)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PointSolutions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k3::enumerate_point_solutions(6, exec_of(state), 32));
}
BENCHMARK(BM_PointSolutions)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateProfiles14(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k3::enumerate_profiles(14, exec_of(state)));
}
BENCHMARK(BM_EnumerateProfiles14)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
