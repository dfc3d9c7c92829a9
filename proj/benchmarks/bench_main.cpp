#include "plwzw/factorize.hpp"
#include "plwzw/phase.hpp"
#include "plwzw/poisson.hpp"
#include "plwzw/rmatrix.hpp"
#include "plwzw/theta.hpp"

#include <benchmark/benchmark.h>

using namespace plwzw;

static void BM_Theta1(benchmark::State& state) {
  const std::complex<double> z(0.37, 0.21);
  for (auto _ : state) benchmark::DoNotOptimize(theta1(z, 1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Theta1)->Arg(8)->Arg(24);

static void BM_LoopMultiply(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const FourierLoop f = random_near_identity(3, M, 0.3, 1, LoopTarget::GL);
  const FourierLoop g = random_near_identity(3, M, 0.3, 2, LoopTarget::GL);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g, 4 * M));
}
BENCHMARK(BM_LoopMultiply)->Arg(2)->Arg(8);

static void BM_Birkhoff(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FourierLoop l = random_near_identity(n, 2, 0.2, 3, LoopTarget::GL);
  for (auto _ : state) benchmark::DoNotOptimize(birkhoff_rh(l, static_cast<int>(state.range(1)), 1e-8));
}
BENCHMARK(BM_Birkhoff)->Args({2, 8})->Args({3, 8})->Args({2, 16})->Unit(benchmark::kMillisecond);

static void BM_SpectralFactorize(benchmark::State& state) {
  const FourierLoop l = random_near_identity(2, 2, 0.2, 4, LoopTarget::GL);
  const FourierLoop phi = multiply(adjoint(l), l);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_factorize(phi, static_cast<int>(state.range(0)), 1e-8));
}
BENCHMARK(BM_SpectralFactorize)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_JacobiatorInf(benchmark::State& state) {
  const AlgebraRep rep = build_sl_rep(static_cast<int>(state.range(0)));
  const ExchangeBrackets br(rep);
  const PhasePointKA p = random_phase_point(rep, 2, 0.3, 5, 0.3, 2.0);
  const std::vector<double> s = {0.3, 1.9, 4.1};
  const std::vector<Mat> k = {p.k.eval(s[0]), p.k.eval(s[1]), p.k.eval(s[2])};
  for (auto _ : state) benchmark::DoNotOptimize(jacobiator_inf(br, k, p.a, s));
}
BENCHMARK(BM_JacobiatorInf)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EllipticKernel(benchmark::State& state) {
  const AlgebraRep rep = build_sl_rep(3);
  const EllipticKernel ek(rep, 1.0);
  const CartanElement a = cartan_from_simple_roots(rep, RVec::Constant(2, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(ek.at_chamber(a, 1.3));
}
BENCHMARK(BM_EllipticKernel);
BENCHMARK_MAIN();
