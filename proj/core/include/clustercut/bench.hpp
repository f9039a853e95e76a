#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clustercut/matmul.hpp"

namespace clustercut {

// One 2-means solve on a random instance, with structure and work recorded.
struct SolveSweepRow {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0;
  std::int64_t sum_domain_sizes = 0;  // bipartition counts over the three groups
  std::int64_t domain_cap = 0;        // 3 * 2^ceil(n/3)
  std::uint64_t mm_scalar_mults = 0;
  std::uint64_t mm_word_ops = 0;
  std::uint64_t csp_queries = 0;
  bool matches_oracle = false;
  std::string optimum;
};

// Solves random instances of the given sizes and cross-checks each optimum
// against the exhaustive oracle.
std::vector<SolveSweepRow> run_solve_sweep(const std::vector<int>& sizes, int d,
                                           std::uint64_t seed, MatmulKernel kernel);

// One square matrix product; ops is the kernel's own counter (scalar
// multiplications, or packed word operations for the bitpacked kernel).
struct KernelSweepRow {
  MatmulKernel kernel = MatmulKernel::kNaive;
  int size = 0;
  std::uint64_t ops = 0;
  double wall_seconds = 0;
};

// Multiplies random 0/1 matrices of the given sizes with every kernel.
std::vector<KernelSweepRow> run_kernel_sweep(const std::vector<int>& sizes, std::uint64_t seed);

// Least-squares slope of log2(ops) against log2(size) for one kernel's rows.
double fitted_exponent(const std::vector<KernelSweepRow>& rows, MatmulKernel kernel);

std::string solve_sweep_csv(const std::vector<SolveSweepRow>& rows);
std::string kernel_sweep_csv(const std::vector<KernelSweepRow>& rows);

}  // namespace clustercut
