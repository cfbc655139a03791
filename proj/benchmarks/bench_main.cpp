#include <benchmark/benchmark.h>

#include "hyperorth/catalog.hpp"
#include "hyperorth/generation.hpp"
#include "hyperorth/quadrature.hpp"
#include "hyperorth/schroedinger.hpp"

using namespace hyperorth;

static void BM_PolyCoeffs(benchmark::State& state) {
  const auto& p = standard_family(CaseId::OneMinusS2).params;
  for (auto _ : state) benchmark::DoNotOptimize(poly_coeffs(p, state.range(0)));
}
BENCHMARK(BM_PolyCoeffs)->Arg(5)->Arg(10)->Arg(20);

static void BM_Rodrigues(benchmark::State& state) {
  const auto& p = standard_family(CaseId::OneMinusS2).params;
  for (auto _ : state) benchmark::DoNotOptimize(rodrigues_coeffs(p, state.range(0)));
}
BENCHMARK(BM_Rodrigues)->Arg(5)->Arg(10)->Arg(20);

static void BM_Zeros(benchmark::State& state) {
  const auto& p = standard_family(CaseId::One).params;
  for (auto _ : state) benchmark::DoNotOptimize(zeros(p, state.range(0)));
}
BENCHMARK(BM_Zeros)->Arg(8)->Arg(16);

static void BM_GramMatrix(benchmark::State& state) {
  const auto& p = standard_families()[state.range(0)].params;
  const int lmax = p.cutoff().is_infinite() ? 7 : *p.cutoff().count() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(p, 0, lmax));
  state.SetLabel(standard_families()[state.range(0)].name);
}
BENCHMARK(BM_GramMatrix)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_FdEigensolve(benchmark::State& state) {
  const auto& p = standard_family(CaseId::S2).params;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_eigensolve([&](double x) { return potential_V(p, 0, x); }, -4, 20, n, 5));
  }
}
BENCHMARK(BM_FdEigensolve)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
