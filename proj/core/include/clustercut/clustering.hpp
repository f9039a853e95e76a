#pragma once

#include <vector>

#include "clustercut/errors.hpp"

namespace clustercut {

// Assignment of n items to clusters 0..k-1.
struct Clustering {
  int k = 0;
  std::vector<int> assignment;

  int n() const { return static_cast<int>(assignment.size()); }
};

// Throws PreconditionError unless every label is in [0,k) and (when
// require_nonempty) every cluster is used.
void validate_clustering(const Clustering& c, int n_items, bool require_nonempty = true);

std::vector<int> cluster_sizes(const Clustering& c);

// Relabels clusters in order of first appearance, so item 0 is always in
// cluster 0. Useful for canonical witnesses.
Clustering canonical_labels(const Clustering& c);

}  // namespace clustercut
