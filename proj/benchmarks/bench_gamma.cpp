#include "psi0/basis.hpp"
#include "psi0/gamma.hpp"
#include "psi0/oracle.hpp"
#include "psi0/summation.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

// Rebuild the iterate chain from scratch so the process-wide gamma() cache
// does not hide the cost being measured.
psi0::SigmaPoly fresh_gamma(int n) {
  psi0::SigmaPoly f = psi0::SigmaPoly::constant(1);
  for (int k = 0; k < n - 3; ++k) f = psi0::summation_step(f);
  return f;
}

void BM_gamma_chain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fresh_gamma(n));
}
BENCHMARK(BM_gamma_chain)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_summation_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const psi0::SigmaPoly f = fresh_gamma(n);
  for (auto _ : state) benchmark::DoNotOptimize(psi0::summation_step(f));
}
BENCHMARK(BM_summation_step)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);

void BM_basis_round_trip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const psi0::SigmaPoly f = fresh_gamma(n);
  const int m = *f.degree() + 1;
  for (auto _ : state) {
    const psi0::XPoly expanded = psi0::to_x_basis(f, m);
    benchmark::DoNotOptimize(psi0::to_sigma_basis(expanded));
  }
}
BENCHMARK(BM_basis_round_trip)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);

void BM_oracle_grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    psi0::GammaCache cache;  // fresh memo: measure the full recursion
    std::vector<long long> x(n, 2);
    benchmark::DoNotOptimize(psi0::oracle_value(n - 3, x, cache));
  }
}
BENCHMARK(BM_oracle_grid)->DenseRange(6, 10, 1);

void BM_h0_evaluation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  psi0::gamma(n);  // warm the polynomial cache; measure evaluation only
  std::vector<psi0::Int> x(n);
  for (int i = 0; i < n; ++i) x[i] = (i * 7 + 3) % 11;
  for (auto _ : state) benchmark::DoNotOptimize(psi0::h0(n, x));
}
BENCHMARK(BM_h0_evaluation)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
