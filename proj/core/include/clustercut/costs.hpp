#pragma once

#include <cstdint>
#include <span>

#include "clustercut/clustering.hpp"
#include "clustercut/graph.hpp"
#include "clustercut/point_set.hpp"
#include "clustercut/rational.hpp"
#include "clustercut/symbolic_sum.hpp"

namespace clustercut {

// k-means cost: sum over clusters of (pairwise squared distances) / |cluster|.
// Identical to the sum of squared distances to cluster centroids. All
// clusters must be nonempty.
Rational kmeans_cost(const PointSet& pts, const Clustering& c);

// min-sum cost in l_p: sum over clusters of pairwise l_p distances, exact.
SymbolicSum minsum_cost(const PointSet& pts, const Clustering& c, int p);

// edges with both endpoints on the same side (side[v] in {0,1})
std::int64_t count_bad_edges(const Graph& g, std::span<const int> side);

// total weight of edges crossing the bipartition
std::int64_t cut_weight(const WeightedGraph& g, std::span<const int> side);

}  // namespace clustercut
