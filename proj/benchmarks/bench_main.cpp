// Benchmarks for the computational hot paths. The recurrence families are
// memoized internally, so those fixtures are warmed once up front and the
// timed bodies measure the per-call work layered on top of the caches.

#include <benchmark/benchmark.h>

#include "asm3/genfun.hpp"
#include "asm3/kernel.hpp"
#include "asm3/oracle.hpp"
#include "asm3/recurrences.hpp"
#include "asm3/trig.hpp"

namespace {

void BM_KernelSolve(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(asm3::kernel::solve(n));
  }
}
BENCHMARK(BM_KernelSolve)->DenseRange(4, 12, 2);

void BM_ReconstructRow(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  asm3::genfun::row(n);  // warm the recurrence caches
  for (auto _ : state) {
    benchmark::DoNotOptimize(asm3::kernel::reconstruct_row(n));
  }
}
BENCHMARK(BM_ReconstructRow)->DenseRange(4, 8, 1);

void BM_EvenRow(benchmark::State& state) {
  const unsigned nu = static_cast<unsigned>(state.range(0));
  asm3::genfun::even_row(nu);  // warm the recurrence caches
  for (auto _ : state) {
    benchmark::DoNotOptimize(asm3::genfun::even_row(nu));
  }
}
BENCHMARK(BM_EvenRow)->Arg(5)->Arg(10)->Arg(19);

void BM_QuotientExpansion(benchmark::State& state) {
  const unsigned nu = static_cast<unsigned>(state.range(0));
  const asm3::Poly p = asm3::recur::phi(1, nu);
  for (auto _ : state) {
    benchmark::DoNotOptimize(asm3::expand_w_poly(p, 2 * nu + 1));
  }
}
BENCHMARK(BM_QuotientExpansion)->Arg(4)->Arg(8)->Arg(12);

void BM_RatioIdentity(benchmark::State& state) {
  const unsigned nu = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(asm3::kernel::ratio_identity(nu));
  }
}
BENCHMARK(BM_RatioIdentity)->Arg(10)->Arg(25)->Arg(50);

void BM_DpOracle(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(asm3::oracle::enumerate(n, 3, asm3::oracle::Mode::dp));
  }
}
BENCHMARK(BM_DpOracle)->DenseRange(6, 10, 2);

void BM_BruteForceOracle(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        asm3::oracle::enumerate(n, 3, asm3::oracle::Mode::bruteforce));
  }
}
BENCHMARK(BM_BruteForceOracle)->DenseRange(4, 6, 1);

}  // namespace

BENCHMARK_MAIN();
