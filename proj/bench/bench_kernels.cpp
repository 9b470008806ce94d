// Serial reference path against the OpenMP path for each parallel kernel.
#include <benchmark/benchmark.h>

#include "cspace/enumerate.hpp"
#include "cspace/examples.hpp"
#include "cspace/isometry.hpp"
#include "cspace/verify.hpp"

using namespace cspace;

namespace {

int jobs_of(const benchmark::State& state) { return static_cast<int>(state.range(0)); }

void BM_a_k(benchmark::State& state) {
  const auto s = random_space(14, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(a_k(s, 7, Exec{jobs_of(state)}).count);
}
BENCHMARK(BM_a_k)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_enumerate_a3_le_4(benchmark::State& state) {
  EnumerationConstraints c;
  c.n_target = 7;
  c.max_a3 = 4;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(c, EnumerationOptions{Exec{jobs_of(state)}}).size());
}
BENCHMARK(BM_enumerate_a3_le_4)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_enumerate_four_colors(benchmark::State& state) {
  EnumerationConstraints c;
  c.n_target = 6;
  c.max_colors = 4;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(c, EnumerationOptions{Exec{jobs_of(state)}}).size());
}
BENCHMARK(BM_enumerate_four_colors)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_sweep_n5(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.exec = Exec{jobs_of(state)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_a2_le_a3(5, "full", cfg).checked);
}
BENCHMARK(BM_sweep_n5)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_sampled_n6(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.exec = Exec{jobs_of(state)};
  cfg.samples = 100000;
  for (auto _ : state) benchmark::DoNotOptimize(verify_a2_le_a3(6, "sampled", cfg).checked);
}
BENCHMARK(BM_sampled_n6)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
