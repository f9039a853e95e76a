#include "clustercut/costs.hpp"

namespace clustercut {

namespace {

BigInt bigint_from_u128(unsigned __int128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

void check_side(std::size_t n, std::span<const int> side) {
  if (side.size() != n) throw PreconditionError("side vector length does not match vertex count");
  for (int s : side)
    if (s != 0 && s != 1) throw PreconditionError("side value must be 0 or 1");
}

}  // namespace

Rational kmeans_cost(const PointSet& pts, const Clustering& c) {
  validate_clustering(c, pts.n());
  std::vector<unsigned __int128> pair_sums(c.k, 0);
  for (int i = 0; i < pts.n(); ++i)
    for (int j = i + 1; j < pts.n(); ++j)
      if (c.assignment[i] == c.assignment[j])
        pair_sums[c.assignment[i]] += static_cast<unsigned __int128>(pts.sq_dist(i, j));
  std::vector<int> sizes = cluster_sizes(c);
  Rational total = 0;
  for (int j = 0; j < c.k; ++j)
    total += Rational(bigint_from_u128(pair_sums[j]), BigInt(sizes[j]));
  return total;
}

SymbolicSum minsum_cost(const PointSet& pts, const Clustering& c, int p) {
  validate_clustering(c, pts.n());
  SymbolicSum total(p);
  for (int i = 0; i < pts.n(); ++i)
    for (int j = i + 1; j < pts.n(); ++j)
      if (c.assignment[i] == c.assignment[j])
        total.add_root(pts.lp_pow_dist(i, j, p), Rational(1));
  return total;
}

std::int64_t count_bad_edges(const Graph& g, std::span<const int> side) {
  check_side(static_cast<std::size_t>(g.n_vertices()), side);
  std::int64_t bad = 0;
  for (const Edge& e : g.edges())
    if (side[e.u] == side[e.v]) ++bad;
  return bad;
}

std::int64_t cut_weight(const WeightedGraph& g, std::span<const int> side) {
  check_side(static_cast<std::size_t>(g.n_vertices()), side);
  std::int64_t cut = 0;
  for (const WeightedEdge& e : g.edges())
    if (side[e.u] != side[e.v]) cut += e.w;
  return cut;
}

}  // namespace clustercut
