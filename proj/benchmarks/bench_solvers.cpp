#include <benchmark/benchmark.h>

#include "equicert/identities.hpp"
#include "equicert/maxent.hpp"

namespace {

using namespace equicert;

void BM_Handelman(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const UPoly p = UPoly::constant(interval_generator_count(n));
  for (auto _ : state) benchmark::DoNotOptimize(solve_handelman(p, n));
}
BENCHMARK(BM_Handelman)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Putinar(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_putinar(n));
}
BENCHMARK(BM_Putinar)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Simplex(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_simplex(d, n));
}
BENCHMARK(BM_Simplex)->ArgsProduct({{2, 3}, {1, 2, 3}})->Unit(benchmark::kMicrosecond);

void BM_RationalizePutinar(benchmark::State& state) {
  const auto s = solve_putinar(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rationalize_certificate(s));
}
BENCHMARK(BM_RationalizePutinar)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

}  // namespace
