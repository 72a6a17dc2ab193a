#include <benchmark/benchmark.h>

#include "cubicsym/audit/audit.hpp"
#include "cubicsym/catalog/catalog.hpp"

using namespace cubicsym;

static void BM_CyclotomicProduct(benchmark::State& state) {
  const Cyclotomic a = Cyclotomic::parse("1 + 2*E(11)^3 - E(11)^7");
  const Cyclotomic b = Cyclotomic::parse("-1/3 + E(11)^1 + 5/2*E(11)^9");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct);

static void BM_Closure(benchmark::State& state) {
  const auto entry = load_entry(state.range(0) == 55 ? "z11-z5-klein" : "alt5-permutation");
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGroup::generate(entry.generators).order());
}
BENCHMARK(BM_Closure)->Arg(55)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_ReynoldsBasis(benchmark::State& state) {
  const auto g = load_group("alt5-permutation");
  for (auto _ : state) benchmark::DoNotOptimize(reynolds_basis(g).dimension());
}
BENCHMARK(BM_ReynoldsBasis)->Unit(benchmark::kMillisecond);

static void BM_KleinScan(benchmark::State& state) {
  const auto f = reduce(CubicForm::parse("x0*x1^2 + x1*x2^2 + x2*x3^2 + x3*x4^2 + x4*x0^2"), PrimeReduction(11, 23));
  for (auto _ : state) benchmark::DoNotOptimize(singular_scan(f, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_KleinScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_AuditAlt4(benchmark::State& state) {
  const auto g = load_group("alt4-klein");
  for (auto _ : state) benchmark::DoNotOptimize(check_criterion(g, "alt4-klein").dim_special);
}
BENCHMARK(BM_AuditAlt4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
