#include <benchmark/benchmark.h>

#include "tatehh/algebra.hpp"
#include "tatehh/codim2_complex.hpp"
#include "tatehh/hochschild.hpp"
#include "tatehh/near_zero.hpp"

using namespace tatehh;

namespace {

const FieldSpec Q = FieldSpec::rational();

QciSpec codim2(int a) { return QciSpec::codim2(Q, a, 2, Scalar::from_int(Q, 2)); }

// rank of the bar differential out of degree n, codim-2 (2,2) over Q
void BM_BarHomologyRank(benchmark::State& state) {
  const QciAlgebra a(codim2(2));
  const BimoduleActions acts(a, regular_bimodule(a));
  const auto n = static_cast<int>(state.range(0));
  const auto d = bar_homology_differential(a, acts, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
  state.counters["cols"] = static_cast<double>(d.cols());
}
BENCHMARK(BM_BarHomologyRank)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BarRankModP(benchmark::State& state) {
  const auto f = FieldSpec::prime(3);
  const QciAlgebra a(QciSpec::commutative(f, {2, 2}));
  const BimoduleActions acts(a, regular_bimodule(a));
  const auto d = bar_cohomology_differential(a, acts, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
}
BENCHMARK(BM_BarRankModP)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BarAssembly(benchmark::State& state) {
  const QciAlgebra a(codim2(3));
  const BimoduleActions acts(a, twisted_bimodule(a, nakayama(a, 1), DiagonalTwist::identity(Q, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(bar_cohomology_differential(a, acts, 3));
}
BENCHMARK(BM_BarAssembly)->Unit(benchmark::kMillisecond);

void BM_DeltaBuild(benchmark::State& state) {
  const auto spec = codim2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(DeltaComplex(spec, 8));
}
BENCHMARK(BM_DeltaBuild)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_DeltaKernels(benchmark::State& state) {
  const auto spec = codim2(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_dims(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeltaKernels)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Zeromaps(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  const QciAlgebra a(QciSpec::exterior(Q, c));
  const auto psi = nakayama(a, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tate_hh0(a, psi));
}
BENCHMARK(BM_Zeromaps)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_ExactnessReport(benchmark::State& state) {
  const QciAlgebra a(QciSpec::exterior(Q, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(exactness_report(a));
}
BENCHMARK(BM_ExactnessReport)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
