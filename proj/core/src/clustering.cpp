#include "clustercut/clustering.hpp"

namespace clustercut {

void validate_clustering(const Clustering& c, int n_items, bool require_nonempty) {
  if (c.k < 1) throw PreconditionError("clustering needs k >= 1");
  if (c.n() != n_items) throw PreconditionError("assignment length does not match item count");
  std::vector<bool> used(c.k, false);
  for (int a : c.assignment) {
    if (a < 0 || a >= c.k) throw PreconditionError("cluster label out of range");
    used[a] = true;
  }
  if (require_nonempty)
    for (int j = 0; j < c.k; ++j)
      if (!used[j]) throw PreconditionError("empty cluster");
}

std::vector<int> cluster_sizes(const Clustering& c) {
  std::vector<int> sizes(c.k, 0);
  for (int a : c.assignment) ++sizes[a];
  return sizes;
}

Clustering canonical_labels(const Clustering& c) {
  Clustering out;
  out.k = c.k;
  out.assignment.resize(c.assignment.size());
  std::vector<int> remap(c.k, -1);
  int next = 0;
  for (std::size_t i = 0; i < c.assignment.size(); ++i) {
    int a = c.assignment[i];
    if (remap[a] < 0) remap[a] = next++;
    out.assignment[i] = remap[a];
  }
  return out;
}

}  // namespace clustercut
