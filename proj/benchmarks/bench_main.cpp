#include <benchmark/benchmark.h>

#include "eps/dynamics.hpp"
#include "eps/hamiltonian.hpp"

namespace {

eps::OperatorPolynomial dense_cubic(double hbar) {
  eps::OperatorPolynomial poly(hbar);
  int v = 1;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c)
        for (int d = 0; d <= 1; ++d)
          poly += eps::OperatorPolynomial::monomial({a, b, c, d}, v++, hbar);
  return poly;
}

void BM_OperatorMultiply(benchmark::State& state) {
  const auto a = dense_cubic(1.0);
  const auto b = dense_cubic(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eps::multiply(a, b));
  }
}
BENCHMARK(BM_OperatorMultiply);

void BM_WignerConjugation(benchmark::State& state) {
  eps::QpPolynomial h;
  h.add(0, 2, 0.5);
  h.add(2, 0, 0.5);
  h.add(1, 1, 0.3);
  const auto hsn = eps::sn_hamiltonian_from_qp(h, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eps::conjugate_by_wigner_unitary(hsn));
  }
}
BENCHMARK(BM_WignerConjugation);

void BM_SemiLagrangianStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  eps::PhysicalParams params;
  params.alpha = 0.5;
  eps::HarmonicDrive drive{.amplitude = 0.1, .omega = 2.0};
  const eps::TransportField field(eps::Gauge::Phi, params, drive);
  eps::PhaseGrid grid = eps::PhaseGrid::make(-8, 8, -4, 4, n, n);
  eps::InitialCondition init;
  init.sq = init.sp = 0.5;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid.at(i, j) = init.evaluate(grid.q_at(i), grid.p_at(j));
  for (auto _ : state) {
    grid = eps::evolve_semilagrangian(grid, field, 0.01, 1,
                                      eps::InterpOrder::Cubic);
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SemiLagrangianStep)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
