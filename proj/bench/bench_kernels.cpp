// Serial reference vs OpenMP kernels: mass enumeration and sphere BFS.

#include <benchmark/benchmark.h>

#include "vhlf/mass_formula.hpp"
#include "vhlf/normal_form.hpp"

namespace {

void BM_MassEnumerateSerial(benchmark::State& state) {
  const auto p = vhlf::MassProblem::standard(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(vhlf::mass_enumerate_serial(p));
}

void BM_MassEnumerateParallel(benchmark::State& state) {
  const auto p = vhlf::MassProblem::standard(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(vhlf::mass_enumerate(p));
}

void BM_MassFormula(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(vhlf::mass_labeled_formula(m, n));
}

const vhlf::VHData& data_for(int q) {
  static const vhlf::VHData d3 = vhlf::build_vh(vhlf::make_config(3, 2));
  static const vhlf::VHData d5 = vhlf::build_vh(vhlf::make_config(5, 2));
  static const vhlf::VHData d7 = vhlf::build_vh(vhlf::make_config(7, 3));
  return q == 3 ? d3 : q == 5 ? d5 : d7;
}

void BM_SphereSerial(benchmark::State& state) {
  const auto& d = data_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vhlf::sphere_table_serial(d, static_cast<int>(state.range(1))));
}

void BM_SphereParallel(benchmark::State& state) {
  const auto& d = data_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vhlf::sphere_table(d, static_cast<int>(state.range(1))));
}

}  // namespace

BENCHMARK(BM_MassEnumerateSerial)->Args({2, 2})->Args({2, 3})->Args({1, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MassEnumerateParallel)->Args({2, 2})->Args({2, 3})->Args({1, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MassFormula)->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereSerial)->Args({3, 6})->Args({5, 4})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereParallel)->Args({3, 6})->Args({5, 4})->Args({7, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
