#include <benchmark/benchmark.h>

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/factor.hpp"
#include "dynatomic/series.hpp"

using namespace dynatomic;

static void BM_Iterate(benchmark::State& state) {
  const auto fam = make_family(2, IntegerRing{});
  for (auto _ : state) benchmark::DoNotOptimize(iterate(fam, state.range(0)));
}
BENCHMARK(BM_Iterate)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Phi(benchmark::State& state) {
  const auto fam = make_family(2, IntegerRing{});
  for (auto _ : state) benchmark::DoNotOptimize(phi(fam, state.range(0)));
}
BENCHMARK(BM_Phi)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_PhiAtC(benchmark::State& state) {
  const auto F = FiniteField::build(10007, 2);
  for (auto _ : state) benchmark::DoNotOptimize(phi_at_c(F, 3, state.range(0), F.from_int(3)));
}
BENCHMARK(BM_PhiAtC)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_CodedRoot(benchmark::State& state) {
  const auto F = FiniteField::build(3, 2);
  const BranchCode code(1, 2, {0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(coded_root(F, 2, code, state.range(0)));
}
BENCHMARK(BM_CodedRoot)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMicrosecond);

static void BM_SubsetFactor(benchmark::State& state) {
  const auto F = FiniteField::build(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(subset_factor(F, 2, state.range(0), 1));
}
BENCHMARK(BM_SubsetFactor)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Scan(benchmark::State& state) {
  const auto F = FiniteField::build(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_degree_scan(F, 2, state.range(0), 3, 0));
}
BENCHMARK(BM_Scan)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
