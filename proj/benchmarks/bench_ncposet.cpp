#include <benchmark/benchmark.h>

#include "ncposet/ncposet.hpp"

using namespace ncposet;

namespace {

void BM_BuildNC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_nc(n));
}
BENCHMARK(BM_BuildNC)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_BuildPEDref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_pe_dref(n));
}
BENCHMARK(BM_BuildPEDref)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_IsLatticePE(benchmark::State& state) {
  const auto pe = build_pe_dref(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_lattice(pe.poset));
}
BENCHMARK(BM_IsLatticePE)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_MoebiusPE(benchmark::State& state) {
  const auto pe = build_pe_dref(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moebius_bottom_top(pe.poset));
}
BENCHMARK(BM_MoebiusPE)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_VerifyElPE(benchmark::State& state) {
  const auto pe = build_pe_dref(static_cast<int>(state.range(0)));
  const auto lab = pe_dref_labeling(pe);
  for (auto _ : state) benchmark::DoNotOptimize(verify_el(pe.poset, lab));
}
BENCHMARK(BM_VerifyElPE)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_NbbTop(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ambient = state.range(1) ? Ambient::kPE : Ambient::kNC;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nbb_bases_top(n, ambient));
}
BENCHMARK(BM_NbbTop)->ArgsProduct({{6, 7, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BuildPchn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_pe_pchn(n));
}
BENCHMARK(BM_BuildPchn)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CountD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_D(n));
}
BENCHMARK(BM_CountD)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
