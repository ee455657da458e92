#include <benchmark/benchmark.h>

#include <random>

#include "douglas/clifford.hpp"
#include "douglas/energy.hpp"
#include "douglas/extension.hpp"
#include "douglas/harmonics.hpp"
#include "douglas/quadrature.hpp"
#include "douglas/special_functions.hpp"

namespace {

using namespace douglas;

void BM_mv_mul(benchmark::State& state) {
  int m = int(state.range(0));
  std::mt19937_64 rng(1);
  auto rand_mv = [&] {
    Multivector a(m);
    for (std::uint32_t i = 0; i < a.size(); ++i) a[i] = double(rng() >> 11) * 0x1.0p-53 - 0.5;
    return a;
  };
  Multivector a = rand_mv();
  Multivector b = rand_mv();
  for (auto _ : state) benchmark::DoNotOptimize(mv_mul(a, b));
}
BENCHMARK(BM_mv_mul)->Arg(2)->Arg(3)->Arg(5);

void BM_product_rule(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_rule(n, 16));
}
BENCHMARK(BM_product_rule)->Arg(3)->Arg(4);

void BM_poisson_kernel(benchmark::State& state) {
  SpherePoint xi{{1.0, 0.0, 0.0, 0.0}};
  SpherePoint eta{{0.6, 0.8, 0.0, 0.0}};
  for (auto _ : state) benchmark::DoNotOptimize(poisson_kernel(4, 0.7, xi, eta));
}
BENCHMARK(BM_poisson_kernel);

void BM_jkernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jkernel(4, 0.9, 0.3));
}
BENCHMARK(BM_jkernel);

void BM_harmonic_basis_eval(benchmark::State& state) {
  int n = int(state.range(0));
  const auto& basis = harmonic_basis(n, 4);
  std::vector<double> x(std::size_t(n), 0.0);
  x[0] = 0.6;
  x[1] = 0.8;
  for (auto _ : state)
    for (const auto& y : basis) benchmark::DoNotOptimize(y.eval(x));
}
BENCHMARK(BM_harmonic_basis_eval)->Arg(3)->Arg(4);

void BM_double_integral(benchmark::State& state) {
  auto u = boundary_from_modes(3, {{1, 1, 1.0}});
  DoubleIntegralParams params;
  params.level = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(energy_double_integral(u, DoubleIntegralMode::offset_grids, params));
}
BENCHMARK(BM_double_integral)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
