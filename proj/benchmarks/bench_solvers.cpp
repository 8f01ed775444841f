#include <benchmark/benchmark.h>

#include "packdom/bounds.hpp"
#include "packdom/constructive.hpp"
#include "packdom/exact.hpp"
#include "packdom/generators.hpp"
#include "packdom/reductions.hpp"
#include "packdom/tree_dp.hpp"
#include "packdom/verify.hpp"

using namespace packdom;

static void BM_TreeDpPath(benchmark::State& state) {
  const Graph g = make_path(static_cast<std::size_t>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_tree(g, {d, 2}).gamma);
}
BENCHMARK(BM_TreeDpPath)
    ->ArgsProduct({{1000, 10000, 100000}, {2, 4}})
    ->Unit(benchmark::kMillisecond);

static void BM_TreeDpRandom(benchmark::State& state) {
  const Graph g = random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_tree(g, {3, 3}).gamma);
}
BENCHMARK(BM_TreeDpRandom)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_ExactRandomGraph(benchmark::State& state) {
  const Graph g = random_connected_graph(static_cast<std::size_t>(state.range(0)), 10, 11);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_exact(g, {2, 2}).gamma);
}
BENCHMARK(BM_ExactRandomGraph)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const Graph g = random_tree(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_gamma(g, {2, 2}).gamma);
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_ReductionDecision(benchmark::State& state) {
  const CnfFormula f = random_formula(4, 3, 17);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_reduction(f, d, 2 * d - 1).agree);
}
BENCHMARK(BM_ReductionDecision)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ConstructGammad2(benchmark::State& state) {
  const Graph g = random_tree(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(construct_gammad2(g, 3).final_set.size());
}
BENCHMARK(BM_ConstructGammad2)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_SurdFloor(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ub_thm5(n, 3).floor());
    n = n % 1000000007 + 7919;
  }
}
BENCHMARK(BM_SurdFloor);
BENCHMARK_MAIN();
