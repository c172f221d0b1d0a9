#include <benchmark/benchmark.h>

#include "hydrorad/kepler/fourier.hpp"
#include "hydrorad/quantum/radial.hpp"
#include "hydrorad/quantum/rates.hpp"
#include "hydrorad/report/datasets.hpp"
#include "hydrorad/specfun/bessel.hpp"
#include "hydrorad/specfun/wigner.hpp"

using namespace hydrorad;

namespace {

void BM_BesselHighOrder(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_j(nu, 0.85 * nu));
}
BENCHMARK(BM_BesselHighOrder)->Arg(10)->Arg(105)->Arg(400);

void BM_FourierTriple(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kepler::fourier_triple(13.0, 0.856));
}
BENCHMARK(BM_FourierTriple);

void BM_Wigner3j(benchmark::State& state) {
  using specfun::HalfInt;
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::wigner_3j(HalfInt::from_int(15), HalfInt::from_int(2),
                                                HalfInt::from_int(13), HalfInt::from_int(4),
                                                HalfInt::from_int(-1), HalfInt::from_int(-3)));
}
BENCHMARK(BM_Wigner3j);

void BM_Wigner6j(benchmark::State& state) {
  using specfun::HalfInt;
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::wigner_6j(
        HalfInt::from_int(15), HalfInt::from_int(13), HalfInt::from_int(2),
        HalfInt::from_twice(29), HalfInt::from_twice(27), HalfInt::from_twice(3)));
}
BENCHMARK(BM_Wigner6j);

void BM_RadialIntegralUncached(benchmark::State& state) {
  quantum::set_radial_cache_enabled(false);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(quantum::radial_integral(n, n / 2, n - 1, n / 2 + 2, 1));
  quantum::set_radial_cache_enabled(true);
}
BENCHMARK(BM_RadialIntegralUncached)->Arg(15)->Arg(30)->Arg(60);

void BM_QuantumBranchingN30(benchmark::State& state) {
  for (auto _ : state) {
    quantum::clear_radial_cache();
    benchmark::DoNotOptimize(quantum::qm_branching_table(Level(1, 30, 15)));
  }
}
BENCHMARK(BM_QuantumBranchingN30)->Unit(benchmark::kMillisecond);

void BM_Table1(benchmark::State& state) {
  for (auto _ : state) {
    quantum::clear_radial_cache();
    benchmark::DoNotOptimize(report::table1_rows());
  }
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
