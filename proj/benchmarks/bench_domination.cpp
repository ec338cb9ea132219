#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "prismfix/domination.hpp"
#include "prismfix/generate.hpp"
#include "prismfix/prism.hpp"
#include "prismfix/verify.hpp"

namespace {

using namespace prismfix;

std::vector<Graph> sample(std::size_t n, double p, int count) {
  std::mt19937_64 rng(n * 1000 + static_cast<std::uint64_t>(p * 100));
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(n, p, rng));
  return out;
}

void BM_DominationNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graphs = sample(n, 0.2, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(graphs[i++ % graphs.size()]).gamma);
}
BENCHMARK(BM_DominationNumber)->Arg(16)->Arg(32)->Arg(48)->Arg(64)->Arg(96);

void BM_NaiveDominationNumber(benchmark::State& state) {
  const auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.2, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(naive_domination_number(graphs[i++ % graphs.size()]).gamma);
}
BENCHMARK(BM_NaiveDominationNumber)->Arg(12)->Arg(16);

void BM_PrismGamma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graphs = sample(n, 0.4, 32);
  std::mt19937_64 rng(5);
  std::vector<Permutation> perms;
  for (int k = 0; k < 32; ++k) perms.push_back(random_permutation(n, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prism_gamma(graphs[i % graphs.size()], perms[i % perms.size()]));
    ++i;
  }
}
BENCHMARK(BM_PrismGamma)->Arg(6)->Arg(8)->Arg(9);

void BM_UniversalFixerEdgeless(benchmark::State& state) {
  // Edgeless graphs are the worst case: no early exit.
  const Graph g = families::empty(static_cast<std::size_t>(state.range(0)));
  const FixerOptions opts{.guard = 8, .automorphism_reduction = state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(is_universal_fixer(g, opts).is_universal_fixer);
}
BENCHMARK(BM_UniversalFixerEdgeless)->Args({6, 0})->Args({7, 0})->Args({6, 1})->Args({7, 1})->Unit(benchmark::kMillisecond);

void BM_CheckGraph(benchmark::State& state) {
  const auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.35, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(check_graph(graphs[i++ % graphs.size()]).index());
}
BENCHMARK(BM_CheckGraph)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
