#include "clustercut/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "clustercut/oracles.hpp"
#include "clustercut/random_instances.hpp"
#include "clustercut/solvers.hpp"

namespace clustercut {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

IntMatrix random_01_matrix(int size, std::mt19937_64& rng) {
  IntMatrix m(size, size);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) m.at(r, c) = bit(rng);
  return m;
}

}  // namespace

std::vector<SolveSweepRow> run_solve_sweep(const std::vector<int>& sizes, int d,
                                           std::uint64_t seed, MatmulKernel kernel) {
  std::vector<SolveSweepRow> rows;
  for (int n : sizes) {
    const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(n);
    const PointSet pts = random_points(n, d, 3, instance_seed);

    OpCounters counters;
    SolveDiagnostics diag;
    SolverConfig config;
    config.kernel = kernel;
    config.counters = &counters;
    config.diagnostics = &diag;

    const auto start = std::chrono::steady_clock::now();
    const SolveReport fast = solve_2means_exact(pts, config);
    const double wall = seconds_since(start);
    const SolveReport oracle = brute_kmeans(pts, 2);

    const CounterSnapshot snap = counters.snapshot();
    SolveSweepRow row;
    row.n = n;
    row.d = d;
    row.seed = instance_seed;
    row.wall_seconds = wall;
    row.sum_domain_sizes = diag.domain_size_bound;
    row.domain_cap = std::int64_t{3} << ((n + 2) / 3);
    row.mm_scalar_mults = snap.mm_scalar_mults;
    row.mm_word_ops = snap.mm_word_ops;
    row.csp_queries = snap.csp_queries;
    row.matches_oracle = fast.optimum && oracle.optimum && *fast.optimum == *oracle.optimum;
    row.optimum = rat_string(*fast.optimum);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<KernelSweepRow> run_kernel_sweep(const std::vector<int>& sizes, std::uint64_t seed) {
  std::vector<KernelSweepRow> rows;
  for (const MatmulKernel kernel :
       {MatmulKernel::kNaive, MatmulKernel::kStrassen, MatmulKernel::kBitpacked}) {
    for (int size : sizes) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(size));
      const IntMatrix a = random_01_matrix(size, rng);
      const IntMatrix b = random_01_matrix(size, rng);

      OpCounters counters;
      const auto start = std::chrono::steady_clock::now();
      const IntMatrix prod = matmul(a, b, kernel, &counters);
      const double wall = seconds_since(start);
      (void)prod;

      const CounterSnapshot snap = counters.snapshot();
      KernelSweepRow row;
      row.kernel = kernel;
      row.size = size;
      row.ops = kernel == MatmulKernel::kBitpacked ? snap.mm_word_ops : snap.mm_scalar_mults;
      row.wall_seconds = wall;
      rows.push_back(row);
    }
  }
  return rows;
}

double fitted_exponent(const std::vector<KernelSweepRow>& rows, MatmulKernel kernel) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const KernelSweepRow& row : rows) {
    if (row.kernel != kernel || row.ops == 0 || row.size <= 0) continue;
    const double x = std::log2(static_cast<double>(row.size));
    const double y = std::log2(static_cast<double>(row.ops));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return 0.0;
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::string solve_sweep_csv(const std::vector<SolveSweepRow>& rows) {
  std::ostringstream out;
  out << "n,d,seed,wall_seconds,sum_domain_sizes,domain_cap,mm_scalar_mults,mm_word_ops,"
         "csp_queries,matches_oracle,optimum\n";
  for (const SolveSweepRow& r : rows)
    out << r.n << ',' << r.d << ',' << r.seed << ',' << r.wall_seconds << ','
        << r.sum_domain_sizes << ',' << r.domain_cap << ',' << r.mm_scalar_mults << ','
        << r.mm_word_ops << ',' << r.csp_queries << ',' << (r.matches_oracle ? 1 : 0) << ','
        << r.optimum << '\n';
  return out.str();
}

std::string kernel_sweep_csv(const std::vector<KernelSweepRow>& rows) {
  std::ostringstream out;
  out << "kernel,size,ops,wall_seconds\n";
  for (const KernelSweepRow& r : rows)
    out << kernel_name(r.kernel) << ',' << r.size << ',' << r.ops << ',' << r.wall_seconds << '\n';
  return out.str();
}

}  // namespace clustercut
