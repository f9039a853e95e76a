#include "clustercut/graph.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace clustercut {

Graph::Graph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), words_((n_vertices + 63) / 64), edges_(std::move(edges)) {
  if (n_ < 0) throw PreconditionError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw PreconditionError("duplicate edge");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
  degree_.assign(n_, 0);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    adj_[static_cast<std::size_t>(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    ++degree_[e.u];
    ++degree_[e.v];
  }
}

bool Graph::is_regular(int d) const {
  return std::all_of(degree_.begin(), degree_.end(), [d](int x) { return x == d; });
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  int d = degree_[0];
  return is_regular(d) ? std::optional<int>(d) : std::nullopt;
}

WeightedGraph::WeightedGraph(int n_vertices, std::vector<WeightedEdge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw PreconditionError("negative vertex count");
  for (WeightedEdge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self-loop");
    if (e.w < 0) throw PreconditionError("negative edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw PreconditionError("duplicate edge");
  for (const WeightedEdge& e : edges_) {
    if (total_ > std::numeric_limits<std::int64_t>::max() - e.w)
      throw CapError("total edge weight exceeds int64");
    total_ += e.w;
  }
}

}  // namespace clustercut
