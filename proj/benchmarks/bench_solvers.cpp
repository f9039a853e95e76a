// Microbenchmarks for the exact solvers against their exhaustive oracles.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "clustercut/graph.hpp"
#include "clustercut/oracles.hpp"
#include "clustercut/point_set.hpp"
#include "clustercut/random_instances.hpp"
#include "clustercut/solvers.hpp"

namespace cc = clustercut;

namespace {

cc::WeightedGraph random_weighted(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cc::WeightedEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2 == 0) edges.push_back({i, j, static_cast<std::int64_t>(rng() % 16)});
  return cc::WeightedGraph(n, std::move(edges));
}

void BM_Solve2Means(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cc::PointSet pts = cc::random_points(n, 3, 5, static_cast<std::uint64_t>(n));
  cc::SolverConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::solve_2means_exact(pts, config));
  }
  state.SetComplexityN(n);
}

void BM_BruteKmeans2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cc::PointSet pts = cc::random_points(n, 3, 5, static_cast<std::uint64_t>(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::brute_kmeans(pts, 2));
  }
  state.SetComplexityN(n);
}

void BM_Solve2MinsumL1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cc::PointSet pts = cc::random_points(n, 2, 6, static_cast<std::uint64_t>(n) + 13);
  cc::SolverConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::solve_2minsum_exact(pts, 1, config));
  }
  state.SetComplexityN(n);
}

void BM_MaxcutFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cc::WeightedGraph g = random_weighted(n, static_cast<std::uint64_t>(n) + 31);
  cc::SolverConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::solve_maxcut_fast(g, config));
  }
  state.SetComplexityN(n);
}

void BM_BruteMaxcut(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cc::WeightedGraph g = random_weighted(n, static_cast<std::uint64_t>(n) + 31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::brute_maxcut(g));
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_Solve2Means)->Arg(6)->Arg(9)->Arg(12)->Arg(15);
BENCHMARK(BM_BruteKmeans2)->Arg(6)->Arg(9)->Arg(12);
BENCHMARK(BM_Solve2MinsumL1)->Arg(6)->Arg(9)->Arg(12);
BENCHMARK(BM_MaxcutFast)->Arg(8)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_BruteMaxcut)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
