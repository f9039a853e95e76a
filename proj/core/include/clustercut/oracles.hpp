#pragma once

#include <cstdint>
#include <string>

#include "clustercut/cnf.hpp"
#include "clustercut/graph.hpp"
#include "clustercut/point_set.hpp"
#include "clustercut/report.hpp"

namespace clustercut {

// Instance-size caps for the exhaustive oracles; exceeding one raises
// CapError. The CLI lets CLUSTERCUT_* environment variables override them.
struct OracleCaps {
  int kmeans_two_n = 14;  // brute_kmeans / brute_minsum with k == 2
  int kmeans_k_n = 10;    // and with k >= 3
  int cut_n = 24;         // bipartition sweeps over graphs
  int nae_vars = 26;
  int coloring_n = 30;
};

// Exhaustive k-means over all k-clusterings with nonempty clusters.
// explored counts every candidate (2^(n-1)-1 bipartitions for k = 2,
// Stirling-number many set partitions for k >= 3); ties break to the
// lexicographically smallest assignment vector.
SolveReport brute_kmeans(const PointSet& pts, int k, const OracleCaps& caps = {});

// Exhaustive min-sum clustering in l_p. Exact for p == 1 (integer metric);
// for p >= 2 candidates are ranked by double with a 1e-9 relative band and
// near-ties resolved by exact radical comparison.
SolveReport brute_minsum(const PointSet& pts, int k, int p, const OracleCaps& caps = {});

// Exhaustive max-cut; explored = 2^(n-1) sides with vertex 0 pinned.
SolveReport brute_maxcut(const WeightedGraph& g, const OracleCaps& caps = {});

enum class PromiseAnswer { kYes, kNo, kNeither };
std::string promise_answer_name(PromiseAnswer a);

// Promise gap version of balanced max-cut on unweighted graphs:
//   YES      some balanced bipartition has exactly t bad edges
//   NO       every bipartition (any balance) has bad > t + (t/n)*imbalance
//   NEITHER  otherwise
// Comparisons are exact (cleared denominators).
PromiseAnswer brute_balanced_maxcut(const Graph& g, std::int64_t t, const OracleCaps& caps = {});

// Proper k-colorability by backtracking (vertex 0 pinned to color 0).
bool brute_coloring(const Graph& g, int k, const OracleCaps& caps = {});

// Not-all-equal satisfiability over all assignments (variable 0 pinned; NAE
// is complement-invariant).
bool brute_nae_sat(const Cnf& f, const OracleCaps& caps = {});

}  // namespace clustercut
