#include <benchmark/benchmark.h>

#include "weylsnp/catalog4d.hpp"
#include "weylsnp/constructors.hpp"
#include "weylsnp/weyl.hpp"

using namespace weylsnp;

namespace {

void BM_LeviCivitaNil4(benchmark::State& state) {
  const MetricLieAlgebra m = build(Family::Nil4, {{"b11", 2}, {"b12", Scalar(1, 3)}, {"b22", 5}});
  for (auto _ : state) benchmark::DoNotOptimize(levi_civita(m));
}
BENCHMARK(BM_LeviCivitaNil4);

void BM_SnpSpaceCatalog(benchmark::State& state) {
  const MetricLieAlgebra m = build(Family::NilRtimesS1, {{"b12", 0}, {"b33", 1}});
  for (auto _ : state) benchmark::DoNotOptimize(snp_space(m));
}
BENCHMARK(BM_SnpSpaceCatalog);

void BM_ClassificationSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_classification(static_cast<std::size_t>(state.range(0)), 7));
}
BENCHMARK(BM_ClassificationSweep)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_DerivationsDyer(benchmark::State& state) {
  const LieAlgebra g = dyer();
  for (auto _ : state) benchmark::DoNotOptimize(derivations(g));
}
BENCHMARK(BM_DerivationsDyer)->Unit(benchmark::kMillisecond);

void BM_StretchScan(benchmark::State& state) {
  const MetricLieAlgebra m = build(Family::NilxR, {{"b11", Scalar(1, 20)}});
  const double grid[] = {1, 10, 100};
  for (auto _ : state)
    benchmark::DoNotOptimize(stretch_scan(m, unit_vector(4, 1), grid, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_StretchScan)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
