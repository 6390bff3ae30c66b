#include <benchmark/benchmark.h>

#include <random>

#include "permpat/antichain.hpp"
#include "permpat/contain.hpp"
#include "permpat/random.hpp"

namespace {

using permpat::Permutation;

void BM_ClosedFormGeneration(benchmark::State& state) {
  const auto i = state.range(0);
  for (auto _ : state) {
    auto element = permpat::antichain::element_closed_form(i);
    benchmark::DoNotOptimize(element);
  }
}
BENCHMARK(BM_ClosedFormGeneration)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_RecursiveGeneration(benchmark::State& state) {
  const auto i = state.range(0);
  for (auto _ : state) {
    auto element = permpat::antichain::element_recursive(i);
    benchmark::DoNotOptimize(element);
  }
}
BENCHMARK(BM_RecursiveGeneration)->Arg(1)->Arg(10)->Arg(100);

// Non-containment of a_1 in a_j: the matcher must exhaust its search tree.
void BM_MatcherAntichainPair(benchmark::State& state) {
  const Permutation pattern = permpat::antichain::element_closed_form(1).perm;
  const Permutation text =
      permpat::antichain::element_closed_form(state.range(0)).perm;
  for (auto _ : state) {
    benchmark::DoNotOptimize(permpat::is_contained(pattern, text));
  }
}
BENCHMARK(BM_MatcherAntichainPair)->DenseRange(2, 10, 2)->Arg(15)->Arg(20);

void BM_OracleAntichainPair(benchmark::State& state) {
  const Permutation pattern = permpat::antichain::element_closed_form(1).perm;
  const Permutation text =
      permpat::antichain::element_closed_form(state.range(0)).perm;
  for (auto _ : state) {
    benchmark::DoNotOptimize(permpat::contains_oracle(pattern, text));
  }
}
BENCHMARK(BM_OracleAntichainPair)->DenseRange(2, 5, 1);

void BM_MatcherRandomPair(benchmark::State& state) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  const Permutation pattern = permpat::random_permutation(rng, 8);
  const Permutation text =
      permpat::random_permutation(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(permpat::is_contained(pattern, text));
  }
}
BENCHMARK(BM_MatcherRandomPair)->Arg(16)->Arg(24)->Arg(32)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
