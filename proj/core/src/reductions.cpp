#include "clustercut/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace clustercut {

namespace {

void require_regular(const Graph& g, int& d_out) {
  auto d = g.regular_degree();
  if (!d) throw PreconditionError("graph is not regular");
  d_out = *d;
}

void check_side_values(int n, std::span<const int> side) {
  if (static_cast<int>(side.size()) != n)
    throw PreconditionError("side vector length does not match vertex count");
  for (int s : side)
    if (s != 0 && s != 1) throw PreconditionError("side value must be 0 or 1");
}

PointSet embed_graph(const Graph& g, EdgeOrientation orient, std::uint64_t seed,
                     std::vector<std::pair<int, int>>& orientation_out) {
  int n = g.n_vertices();
  int m = g.m();
  if (m < 1) throw PreconditionError("embedding needs at least one edge");
  std::mt19937_64 rng(seed);
  orientation_out.clear();
  orientation_out.reserve(m);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(n) * m, 0);
  for (int e = 0; e < m; ++e) {
    int tail = g.edges()[e].u, head = g.edges()[e].v;  // u < v: low-to-high default
    if (orient == EdgeOrientation::kRandomized && (rng() & 1)) std::swap(tail, head);
    orientation_out.emplace_back(tail, head);
    coords[static_cast<std::size_t>(tail) * m + e] = 1;
    coords[static_cast<std::size_t>(head) * m + e] = -1;
  }
  return PointSet(n, m, std::move(coords));
}

// counts of bad edges inside each side
std::array<std::int64_t, 2> bad_per_side(const Graph& g, std::span<const int> side) {
  std::array<std::int64_t, 2> r{0, 0};
  for (const Edge& e : g.edges())
    if (side[e.u] == side[e.v]) ++r[side[e.u]];
  return r;
}

}  // namespace

Rational EmbeddedInstance::threshold_rational() const {
  if (!threshold.is_rational())
    throw PreconditionError("threshold carries radicals; use the symbolic form");
  return threshold.rational_part();
}

EmbeddedInstance maxcut_to_2means(const Graph& g, std::int64_t t, EdgeOrientation orient,
                                  std::uint64_t seed) {
  int d = 0;
  require_regular(g, d);
  int n = g.n_vertices();
  if (n % 2 != 0) throw PreconditionError("balanced target needs an even vertex count");
  if (t < 0 || t > g.m()) throw PreconditionError("bad-edge target out of range");
  std::vector<std::pair<int, int>> orientation;
  PointSet pts = embed_graph(g, orient, seed, orientation);
  SymbolicSum threshold(1);
  // nd - 2d + 4t/n
  threshold.add_rational(Rational(static_cast<std::int64_t>(n) * d - 2 * d) +
                         make_rational(4 * t, n));
  return EmbeddedInstance{std::move(pts), std::move(threshold), "maxcut-to-2means",
                          std::move(orientation)};
}

Rational predicted_2means_cost(const Graph& g, std::span<const int> side) {
  int d = 0;
  require_regular(g, d);
  int n = g.n_vertices();
  check_side_values(n, side);
  std::array<int, 2> sizes{0, 0};
  for (int s : side) ++sizes[s];
  if (sizes[0] == 0 || sizes[1] == 0) throw PreconditionError("empty part");
  auto r = bad_per_side(g, side);
  Rational cost(static_cast<std::int64_t>(n) * d - 2 * d);
  cost += make_rational(2 * r[0], sizes[0]);
  cost += make_rational(2 * r[1], sizes[1]);
  return cost;
}

EmbeddedInstance coloring_to_kmeans(const Graph& g, int k, EdgeOrientation orient,
                                    std::uint64_t seed) {
  int d = 0;
  require_regular(g, d);
  if (k < 2) throw PreconditionError("need k >= 2");
  int n = g.n_vertices();
  std::vector<std::pair<int, int>> orientation;
  PointSet pts = embed_graph(g, orient, seed, orientation);
  SymbolicSum threshold(1);
  threshold.add_rational(Rational(static_cast<std::int64_t>(n) * d - static_cast<std::int64_t>(k) * d));
  return EmbeddedInstance{std::move(pts), std::move(threshold), "coloring-to-kmeans",
                          std::move(orientation)};
}

EmbeddedInstance maxcut_to_2minsum(const Graph& g, std::int64_t t, int p, EdgeOrientation orient,
                                   std::uint64_t seed) {
  int d = 0;
  require_regular(g, d);
  int n = g.n_vertices();
  if (n % 2 != 0) throw PreconditionError("balanced target needs an even vertex count");
  if (p < 1) throw PreconditionError("metric exponent must be >= 1");
  if (t < 0 || t > g.m()) throw PreconditionError("bad-edge target out of range");
  std::vector<std::pair<int, int>> orientation;
  PointSet pts = embed_graph(g, orient, seed, orientation);
  // (2d)^(1/p) * (n^2-2n)/4 + t * [(2d+2^p-2)^(1/p) - (2d)^(1/p)]
  SymbolicSum threshold(p);
  std::int64_t near = 2 * d;  // non-adjacent pair radicand
  std::int64_t adj = 2 * d + (std::int64_t{1} << p) - 2;
  threshold.add_root(near, make_rational(static_cast<std::int64_t>(n) * n - 2 * n, 4));
  threshold.add_root(adj, Rational(t));
  threshold.add_root(near, Rational(-t));
  return EmbeddedInstance{std::move(pts), std::move(threshold), "maxcut-to-2minsum",
                          std::move(orientation)};
}

SymbolicSum predicted_2minsum_cost(const Graph& g, std::span<const int> side, int p) {
  int d = 0;
  require_regular(g, d);
  if (p < 1) throw PreconditionError("metric exponent must be >= 1");
  int n = g.n_vertices();
  check_side_values(n, side);
  std::array<std::int64_t, 2> sizes{0, 0};
  for (int s : side) ++sizes[s];
  if (sizes[0] == 0 || sizes[1] == 0) throw PreconditionError("empty part");
  auto r = bad_per_side(g, side);
  std::int64_t near = 2 * d;
  std::int64_t adj = 2 * d + (std::int64_t{1} << p) - 2;
  SymbolicSum cost(p);
  cost.add_root(near, make_rational(sizes[0] * sizes[0] + sizes[1] * sizes[1] - n, 2));
  cost.add_root(adj, Rational(r[0] + r[1]));
  cost.add_root(near, Rational(-(r[0] + r[1])));
  return cost;
}

MinsumReductionResult minsum_to_maxcut(const PointSet& pts, int p, std::int64_t weight_cap) {
  if (p < 1) throw PreconditionError("metric exponent must be >= 1");
  int n = pts.n();
  MinsumReductionResult out;
  out.p = p;
  out.exact = p == 1;
  out.scale = p == 1 ? 1 : 1000000;
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t rad = pts.lp_pow_dist(i, j, p);
      std::int64_t w;
      if (p == 1) {
        w = rad;
      } else {
        double dist = std::pow(static_cast<double>(rad), 1.0 / p);
        w = std::llround(dist * static_cast<double>(out.scale));
      }
      if (w > weight_cap) throw CapError("edge weight exceeds cap");
      edges.push_back(WeightedEdge{i, j, w});
    }
  out.graph = WeightedGraph(n, std::move(edges));
  return out;
}

std::vector<int> GadgetGraph::degrees_with_multiplicity() const {
  std::vector<int> deg(n_vertices, 0);
  for (const Edge& e : slots) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::int64_t GadgetGraph::beta(std::span<const int> side) const {
  check_side_values(n_vertices, side);
  std::int64_t bad = 0;
  for (const Edge& e : slots)
    if (side[e.u] == side[e.v]) ++bad;
  return bad;
}

std::int64_t GadgetGraph::bad_in_family(const Family& f, std::span<const int> side) const {
  std::int64_t bad = 0;
  for (int s = f.offset; s < f.offset + f.count; ++s)
    if (side[slots[s].u] == side[slots[s].v]) ++bad;
  return bad;
}

GadgetGraph nae3sat_to_maxcut(const Cnf& f) {
  f.validate_gadget_input();
  GadgetGraph g;
  g.n_vars = f.n_vars();
  g.n_clauses = f.m();
  g.n_vertices = 8 * f.n_vars();
  g.t = 8 * static_cast<std::int64_t>(f.m());
  auto add_triangle = [&](const std::array<std::pair<int, int>, 3>& lits, int copy) {
    // lits: (var, sign); triangle over the three literal copies
    for (int a = 0; a < 3; ++a) {
      int b = (a + 1) % 3;
      g.slots.push_back(Edge{GadgetGraph::vertex_id(lits[a].first, lits[a].second, copy),
                             GadgetGraph::vertex_id(lits[b].first, lits[b].second, copy)});
    }
  };
  for (const Clause& c : f.clauses()) {
    for (int copy = 0; copy < 4; ++copy) {
      GadgetGraph::Family fam{static_cast<int>(g.slots.size()), 6};
      std::array<std::pair<int, int>, 3> pos, neg;
      for (int i = 0; i < 3; ++i) {
        pos[i] = {c[i].var, c[i].sign};
        neg[i] = {c[i].var, 1 - c[i].sign};
      }
      add_triangle(pos, copy);  // A_{j,k}^0
      add_triangle(neg, copy);  // A_{j,k}^1
      g.clause_families.push_back(fam);
    }
  }
  for (int i = 0; i < f.n_vars(); ++i) {
    GadgetGraph::Family fam{static_cast<int>(g.slots.size()), 16};
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l)
        g.slots.push_back(Edge{GadgetGraph::vertex_id(i, 0, k), GadgetGraph::vertex_id(i, 1, l)});
    g.variable_families.push_back(fam);
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.slots) {
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) g.parallel_free = false;
  }
  return g;
}

std::vector<int> gadget_cut_from_assignment(const GadgetGraph& g, std::span<const int> values) {
  if (static_cast<int>(values.size()) != g.n_vars)
    throw PreconditionError("assignment length does not match variable count");
  std::vector<int> side(g.n_vertices, 0);
  for (int i = 0; i < g.n_vars; ++i) {
    int v = values[i];
    if (v != 0 && v != 1) throw PreconditionError("assignment value must be 0 or 1");
    for (int copy = 0; copy < 4; ++copy) {
      side[GadgetGraph::vertex_id(i, 0, copy)] = v;
      side[GadgetGraph::vertex_id(i, 1, copy)] = 1 - v;
    }
  }
  return side;
}

BadEdgeBoundReport verify_badedge_bound(const GadgetGraph& g, std::span<const int> side) {
  BadEdgeBoundReport rep;
  rep.beta = g.beta(side);
  std::int64_t sz1 = 0;
  for (int s : side) sz1 += s;
  rep.imbalance = std::abs(static_cast<std::int64_t>(g.n_vertices) - 2 * sz1);
  rep.bound = 8 * static_cast<std::int64_t>(g.n_clauses) + 2 * rep.imbalance;
  rep.holds = rep.beta >= rep.bound;
  rep.balanced = rep.imbalance == 0;
  rep.equality = rep.beta == rep.bound;
  if (rep.balanced && rep.equality) {
    rep.families_at_equality = true;
    for (const auto& fam : g.clause_families)
      if (g.bad_in_family(fam, side) != 2) rep.families_at_equality = false;
    for (const auto& fam : g.variable_families)
      if (g.bad_in_family(fam, side) != 0) rep.families_at_equality = false;
  }
  return rep;
}

}  // namespace clustercut
