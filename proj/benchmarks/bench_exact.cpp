#include <benchmark/benchmark.h>

#include "equicert/families.hpp"
#include "equicert/identities.hpp"
#include "equicert/momatrix.hpp"

namespace {

using namespace equicert;

void BM_InvertHankel(benchmark::State& state) {
  const auto m = moment_matrix(MeasureId::arcsine(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert_exact(m));
}
BENCHMARK(BM_InvertHankel)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_InvertHilbert(benchmark::State& state) {
  const auto m = moment_matrix(MeasureId::lebesgue01(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert_exact(m));
}
BENCHMARK(BM_InvertHilbert)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_InvertSimplexEquilibrium(benchmark::State& state) {
  const auto m = moment_matrix(MeasureId::simplex_equilibrium(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert_exact(m));
}
BENCHMARK(BM_InvertSimplexEquilibrium)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

void BM_VerifyPell(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_pell(n));
}
BENCHMARK(BM_VerifyPell)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_VerifyCheby2(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_unity_interval(n, UnityVariant::Cheby2));
}
BENCHMARK(BM_VerifyCheby2)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_VerifySimplexUnity(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_simplex_unity(d, 2));
}
BENCHMARK(BM_VerifySimplexUnity)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_SimplexEquilibriumForm(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simplex_equilibrium_form(n, Normalization::PaperPi));
}
BENCHMARK(BM_SimplexEquilibriumForm)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
