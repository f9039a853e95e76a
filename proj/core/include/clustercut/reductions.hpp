#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clustercut/cnf.hpp"
#include "clustercut/graph.hpp"
#include "clustercut/point_set.hpp"
#include "clustercut/rational.hpp"
#include "clustercut/symbolic_sum.hpp"

namespace clustercut {

enum class EdgeOrientation { kLowToHigh, kRandomized };

// A regular graph embedded as one integer point per vertex, one coordinate
// per edge: +1 at the tail, -1 at the head, 0 elsewhere. Clustering costs of
// the embedding depend only on the graph, never on the orientation.
struct EmbeddedInstance {
  PointSet points;
  SymbolicSum threshold;  // decision threshold; rational for the 2-means maps
  std::string provenance;
  std::vector<std::pair<int, int>> orientation;  // (tail, head) per edge, edge order

  Rational threshold_rational() const;  // throws PreconditionError if radicals remain
};

// Balanced-max-cut instance -> 2-means instance deciding threshold
// nd - 2d + 4t/n (d-regular graph, n even, bad-edge target t).
EmbeddedInstance maxcut_to_2means(const Graph& g, std::int64_t t,
                                  EdgeOrientation orient = EdgeOrientation::kLowToHigh,
                                  std::uint64_t seed = 0);

// Closed-form 2-means cost of the embedded bipartition:
// nd - 2d + 2*(r0/|C0| + r1/|C1|), r_j = bad edges inside part j.
Rational predicted_2means_cost(const Graph& g, std::span<const int> side);

// k-coloring instance -> k-means instance deciding threshold nd - kd.
EmbeddedInstance coloring_to_kmeans(const Graph& g, int k,
                                    EdgeOrientation orient = EdgeOrientation::kLowToHigh,
                                    std::uint64_t seed = 0);

// Balanced-max-cut -> 2-min-sum in l_p; threshold
// (2d)^(1/p) * (n^2-2n)/4 + t*[(2d+2^p-2)^(1/p) - (2d)^(1/p)].
EmbeddedInstance maxcut_to_2minsum(const Graph& g, std::int64_t t, int p,
                                   EdgeOrientation orient = EdgeOrientation::kLowToHigh,
                                   std::uint64_t seed = 0);

// Closed-form min-sum cost of an embedded bipartition:
// ((2d)^(1/p)/2)*(|V0|^2+|V1|^2-n) + (r0+r1)*[(2d+2^p-2)^(1/p) - (2d)^(1/p)].
SymbolicSum predicted_2minsum_cost(const Graph& g, std::span<const int> side, int p);

// Min-sum 2-clustering -> max-cut: complete graph, edge weight = pairwise
// distance. Exact integers for p = 1; for p >= 2 distances are scaled by 10^6
// and rounded, and scale records that (1 = exact metric).
struct MinsumReductionResult {
  WeightedGraph graph;
  std::int64_t scale = 1;
  int p = 1;
  bool exact = true;
};
MinsumReductionResult minsum_to_maxcut(const PointSet& pts, int p,
                                       std::int64_t weight_cap = std::int64_t{1} << 62);

// Balanced-max-cut hardness gadget built from a linear 4-regular NAE-3-SAT
// formula. Edges are kept as an ordered list of slots grouped into families:
// per clause j and copy k, the twin triangles A_{j,k}^0 (3 slots) then
// A_{j,k}^1 (3 slots); per variable i, the K_{4,4} biclique B_i (16 slots).
// Families are disjoint by slot; distinct families may repeat a vertex pair,
// so the slot list is a multiset and all counts (|E| = 48n, 12-regularity,
// bad-edge counts) are taken with multiplicity.
struct GadgetGraph {
  int n_vars = 0;
  int n_clauses = 0;
  int n_vertices = 0;             // 8 * n_vars
  std::vector<Edge> slots;        // 24m clause slots then 16n biclique slots
  struct Family {
    int offset;
    int count;
  };
  std::vector<Family> clause_families;    // 4m entries (A_{j,k}), 6 slots each
  std::vector<Family> variable_families;  // n entries (B_i), 16 slots each
  std::int64_t t = 0;                     // 8m
  bool parallel_free = true;              // no vertex pair repeats across slots

  // vertex (literal copy) numbering: 8*var + 4*sign + copy
  static int vertex_id(int var, int sign, int copy) { return 8 * var + 4 * sign + copy; }
  int slot_count() const { return static_cast<int>(slots.size()); }
  std::vector<int> degrees_with_multiplicity() const;
  // bad slots (both endpoints on one side), with multiplicity
  std::int64_t beta(std::span<const int> side) const;
  std::int64_t bad_in_family(const Family& f, std::span<const int> side) const;
};

GadgetGraph nae3sat_to_maxcut(const Cnf& f);

// side of each vertex for the cut induced by a NAE assignment (value[i] is the
// truth value of variable i): positive copies go to side value[i]
std::vector<int> gadget_cut_from_assignment(const GadgetGraph& g, std::span<const int> values);

struct BadEdgeBoundReport {
  std::int64_t beta = 0;
  std::int64_t bound = 0;   // 8m + 2*||V0|-|V1||
  std::int64_t imbalance = 0;
  bool holds = false;
  bool balanced = false;
  bool equality = false;
  // when balanced equality holds: a_{j,k} == 2 for every clause family and
  // b_i == 0 for every biclique
  bool families_at_equality = false;
};
BadEdgeBoundReport verify_badedge_bound(const GadgetGraph& g, std::span<const int> side);

}  // namespace clustercut
