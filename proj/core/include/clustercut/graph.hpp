#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clustercut/errors.hpp"

namespace clustercut {

struct Edge {
  int u, v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Edges are normalized to u < v and kept sorted;
// adjacency is answered from packed bit rows.
class Graph {
 public:
  Graph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  int degree(int v) const { return degree_[v]; }
  bool is_regular(int d) const;
  // degree if the graph is regular
  std::optional<int> regular_degree() const;

 private:
  int n_;
  int words_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
};

struct WeightedEdge {
  int u, v;
  std::int64_t w;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple undirected graph with nonnegative integer edge weights.
class WeightedGraph {
 public:
  WeightedGraph() : n_(0) {}
  WeightedGraph(int n_vertices, std::vector<WeightedEdge> edges);

  int n_vertices() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::int64_t total_weight() const { return total_; }

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::int64_t total_ = 0;
};

}  // namespace clustercut
