#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "fringe/factor.hpp"
#include "fringe/intensity.hpp"
#include "fringe/series.hpp"
#include "fringe/sieve.hpp"
#include "fringe/zeta.hpp"

namespace {

void BM_IntensityFloat(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> xs(-1000.0, 1000.0);
  std::vector<double> samples(1024);
  for (double& x : samples) x = xs(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe::intensity_float(p, samples[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_IntensityFloat)->Arg(2)->Arg(97)->Arg(997);

void BM_OmegaMExact(benchmark::State& state) {
  const auto primes = fringe::first_primes(static_cast<int>(state.range(0)));
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe::omega_m_exact(primes, n));
    n = n % 1000000 + 1;
  }
}
BENCHMARK(BM_OmegaMExact)->Arg(4)->Arg(25)->Arg(168);

void BM_OmegaSeries(benchmark::State& state) {
  std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe::omega_series(n));
    if (++n > state.range(0) + 1000) n = state.range(0);
  }
}
BENCHMARK(BM_OmegaSeries)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void BM_FactorizeSeries(benchmark::State& state) {
  std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe::factorize_series(n));
    if (++n > state.range(0) + 1000) n = state.range(0);
  }
}
BENCHMARK(BM_FactorizeSeries)->Arg(1000000)->Arg(1000000000);

void BM_Eratosthenes(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe::eratosthenes(state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eratosthenes)->Arg(10000)->Arg(1000000)->Complexity();

void BM_SieveTo(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe::sieve_to(state.range(0), {2}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SieveTo)->Arg(10000)->Arg(1000000)->Complexity();

void BM_ZetaIdentity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe::zeta_identity_check(2.0, state.range(0)));
  }
}
BENCHMARK(BM_ZetaIdentity)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
