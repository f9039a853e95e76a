// Microbenchmarks for the matrix kernels and triangle detection.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "clustercut/matmul.hpp"

namespace cc = clustercut;

namespace {

cc::IntMatrix random_01_matrix(int rows, int cols, std::mt19937_64& rng) {
  cc::IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = static_cast<std::int64_t>(rng() & 1);
  return m;
}

cc::BitMatrix random_bit_matrix(int rows, int cols, std::mt19937_64& rng) {
  cc::BitMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, (rng() & 3) == 0);
  return m;
}

constexpr cc::MatmulKernel kKernels[] = {cc::MatmulKernel::kNaive, cc::MatmulKernel::kStrassen,
                                         cc::MatmulKernel::kBitpacked};

void BM_Matmul(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const cc::MatmulKernel kernel = kKernels[state.range(1)];
  std::mt19937_64 rng(static_cast<std::uint64_t>(size));
  const cc::IntMatrix a = random_01_matrix(size, size, rng);
  const cc::IntMatrix b = random_01_matrix(size, size, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::matmul(a, b, kernel));
  }
  state.SetComplexityN(size);
}

void BM_TriangleDetect(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  std::mt19937_64 rng(static_cast<std::uint64_t>(size) + 7);
  const cc::BitMatrix a12 = random_bit_matrix(size, size, rng);
  const cc::BitMatrix a23 = random_bit_matrix(size, size, rng);
  const cc::BitMatrix a13 = random_bit_matrix(size, size, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::triangle_detect(a12, a23, a13, cc::MatmulKernel::kBitpacked));
  }
  state.SetComplexityN(size);
}

}  // namespace

BENCHMARK(BM_Matmul)
    ->ArgsProduct({{32, 64, 128, 256}, {0, 1, 2}})
    ->Complexity(benchmark::oNCubed);
BENCHMARK(BM_TriangleDetect)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
