// Serial reference vs OpenMP path for each data-parallel kernel.

#include <benchmark/benchmark.h>

#include "overpart/hyper.hpp"
#include "overpart/maps.hpp"

using namespace overpart;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_CauchyProduct(benchmark::State& state) {
  const int order = static_cast<int>(state.range(1));
  const QSeries a = rhs_theorem11(6, ZMode::tracked, order);
  const QSeries b = pochhammer_infinite({-1, 1, 1}, order);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b, exec_of(state)));
}
BENCHMARK(BM_CauchyProduct)->ArgNames({"parallel", "order"})->ArgsProduct({{0, 1}, {64, 128, 256}});

void BM_EnumerationGF(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gf_from_enumeration(Family::Gt, 5, max_n, exec_of(state)));
}
BENCHMARK(BM_EnumerationGF)->ArgNames({"parallel", "max_n"})->ArgsProduct({{0, 1}, {30, 40}});

void BM_FiberCheck(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_fibers(4, max_n, MapKind::phi, exec_of(state)));
}
BENCHMARK(BM_FiberCheck)->ArgNames({"parallel", "max_n"})->ArgsProduct({{0, 1}, {16, 22}});

void BM_Chain(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_section3_chain(5, static_cast<int>(state.range(1)), ZMode::tracked, false,
                                                   exec_of(state)));
  }
}
BENCHMARK(BM_Chain)->ArgNames({"parallel", "order"})->ArgsProduct({{0, 1}, {40}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
