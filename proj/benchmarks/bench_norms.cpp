#include <benchmark/benchmark.h>

#include "sfs/lens_norm.hpp"
#include "sfs/norm_search.hpp"

using namespace sfs;

static void BM_NGenus(benchmark::State& state) {
  const Int twok = state.range(0);
  for (auto _ : state) {
    Int total = 0;
    for (Int q = 1; q < twok; q += 2)
      if (gcd(twok, q) == 1) total += n_genus({twok, q});
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_NGenus)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_NGenusOracle(benchmark::State& state) {
  const Int twok = state.range(0);
  for (auto _ : state) {
    Int total = 0;
    for (Int q = 1; q < twok; q += 2)
      if (gcd(twok, q) == 1) total += n_genus_oracle({twok, q});
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_NGenusOracle)->Arg(64)->Arg(1024);

// Family S2((2,-1),(3,1),(2n,1)).
static void BM_NormsFamily41(benchmark::State& state) {
  const auto m = SeifertPresentation::from_pairs({{{2, -1}, {3, 1}, {2 * state.range(0), 1}}});
  for (auto _ : state) benchmark::DoNotOptimize(compute_norms(m));
}
BENCHMARK(BM_NormsFamily41)->Arg(4)->Arg(16)->Arg(64);

// Klein-four case S2((2,-1),(2,1),(2n,1)).
static void BM_NormsPrism(benchmark::State& state) {
  const auto m = SeifertPresentation::from_pairs({{{2, -1}, {2, 1}, {2 * state.range(0), 1}}});
  for (auto _ : state) benchmark::DoNotOptimize(compute_norms(m));
}
BENCHMARK(BM_NormsPrism)->Arg(3)->Arg(12)->Arg(48);

// All multiplicities odd: the two-parameter sweep.
static void BM_NormsAllOdd(benchmark::State& state) {
  const Int a = state.range(0);
  const auto m = SeifertPresentation::from_pairs({{{3, 1}, {5, 2}, {a, 1}}});
  for (auto _ : state) benchmark::DoNotOptimize(compute_norms(m));
}
BENCHMARK(BM_NormsAllOdd)->Arg(7)->Arg(13)->Arg(25);

BENCHMARK_MAIN();
