#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "clustercut/counters.hpp"
#include "clustercut/csp.hpp"
#include "clustercut/graph.hpp"
#include "clustercut/matmul.hpp"
#include "clustercut/point_set.hpp"
#include "clustercut/rational.hpp"
#include "clustercut/report.hpp"

namespace clustercut {

// Assignment of points to three groups plus a size signature: group g
// contributes a[g] points to the first cluster and b[g] to the second.
struct SplitSpec {
  std::vector<int> group;  // point index -> group in {0,1,2}
  std::array<int, 3> a{};
  std::array<int, 3> b{};

  // group labels in range, group sizes differ by at most one, a+b matches
  // each group size, and both clusters are nonempty
  void validate() const;
};

// A satisfiable target pair found during the sweep, with its witness.
struct CandidateSolution {
  std::int64_t kv = 0;
  std::int64_t ke = 0;
  SplitSpec split;
  std::array<std::uint32_t, 3> first_cluster_masks{};  // over members of each group
  Rational ratio;  // (kv + ke) / ((a1+a2+a3)(b1+b2+b3))
};

struct SolveDiagnostics {
  std::int64_t signatures_total = 0;
  std::int64_t signatures_skipped = 0;  // symmetry-pruned or clipped before a query
  std::int64_t queries = 0;
  std::int64_t yes_queries = 0;
  std::int64_t domain_size_bound = 0;  // sum of per-group bipartition counts
};

struct SolverConfig {
  MatmulKernel kernel = MatmulKernel::kBitpacked;
  int threads = 1;
  bool dense_targets = false;  // query every integer target pair (tiny inputs only)
  std::int64_t weight_cap = kDefaultWeightCap;
  std::size_t max_table_entries = std::size_t{1} << 22;
  OpCounters* counters = nullptr;
  SolveDiagnostics* diagnostics = nullptr;
};

// Weighted 2-CSP whose assignments are the 2-clusterings respecting `split`:
// each variable ranges over the C(|P_g|, a_g) bipartitions of its group, and
// an assignment meets targets (kv, ke) iff its weight totals do.
Csp2Instance build_csp_for_split(const PointSet& points, const SplitSpec& split,
                                 std::int64_t kv_target, std::int64_t ke_target,
                                 const SolverConfig& config = {});

// Exact Euclidean 2-means: sweeps all size signatures over a fixed 3-way
// grouping, per signature walks achievable (kv, ke) targets by ascending
// total, and keeps the best ratio across signatures. Witness is a 0/1
// cluster label per point; optimum is an exact rational.
SolveReport solve_2means_exact(const PointSet& points, const SolverConfig& config = {});

// Exact max-cut: folds the graph into three super-variables and walks
// achievable cut totals in descending order; the first satisfiable total is
// the maximum. Witness is a 0/1 side per vertex with side[0] = 0.
SolveReport solve_maxcut_fast(const WeightedGraph& graph, const SolverConfig& config = {});

// Exact 2-min-sum through the complete-graph max-cut reduction. p = 1 runs on
// exact integer weights; p >= 2 ranks partitions on scaled integer weights
// and reports the exact symbolic cost of the returned partition.
SolveReport solve_2minsum_exact(const PointSet& points, int p, const SolverConfig& config = {});

}  // namespace clustercut
