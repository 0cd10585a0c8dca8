#include <benchmark/benchmark.h>

#include <numbers>

#include "nsspec/bgk.hpp"
#include "nsspec/linalg.hpp"
#include "nsspec/models.hpp"
#include "nsspec/perturbation.hpp"
#include "nsspec/rng.hpp"
#include "nsspec/symbol.hpp"

using namespace nsspec;

namespace {

ComplexMatrix random_matrix(int n) {
  CounterRng rng(42, static_cast<std::uint64_t>(n));
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.unit_square();
  return m / schatten_norm(m, 2.0);
}

void BM_RegularizedDeterminant(benchmark::State& state) {
  const ComplexMatrix c = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(regularized_determinant(c, 2));
}
BENCHMARK(BM_RegularizedDeterminant)->Arg(8)->Arg(32)->Arg(128);

void BM_LittleF(benchmark::State& state) {
  const PerturbationDeterminant pd(build_abstract_model(1, static_cast<int>(state.range(0)), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(pd.little_f(Complex(-1.5, 0.7)));
}
BENCHMARK(BM_LittleF)->Arg(10)->Arg(40);

void BM_LpResolventNorm(benchmark::State& state) {
  const SymbolParams sp{Complex(2.0, 0.05), 3.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(lp_resolvent_norm(sp).value);
}
BENCHMARK(BM_LpResolventNorm)->Arg(2)->Arg(3)->Arg(4);

void BM_GrowthK(benchmark::State& state) {
  const BoundaryData bd{1.0, {{Complex(1.0, 0.0), 2.0}, {Complex(-1.0, 0.0), 0.5}}, 0.5};
  const BlaschkeProduct h = blaschke_oracle({{{Complex(0.5, 0.1), 1}, {Complex(-0.3, 0.6), 2}}});
  const auto lattice = polar_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(growth_k(h, bd, lattice));
}
BENCHMARK(BM_GrowthK);

void BM_Eigenvalues(benchmark::State& state) {
  const ComplexMatrix a = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue_list(a));
}
BENCHMARK(BM_Eigenvalues)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
