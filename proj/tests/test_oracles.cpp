#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "clustercut/costs.hpp"
#include "clustercut/oracles.hpp"
#include "clustercut/point_set.hpp"

using namespace clustercut;

namespace {

Clustering make_clustering(int k, std::vector<int> assignment) {
  return Clustering{k, std::move(assignment)};
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

WeightedGraph unit_weights(const Graph& g) {
  std::vector<WeightedEdge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1});
  return WeightedGraph(g.n_vertices(), std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});        // outer cycle
    edges.push_back({i, i + 5});              // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

PointSet random_point_set(std::mt19937_64& rng, int n, int d, std::int64_t lim) {
  std::uniform_int_distribution<std::int64_t> coord(-lim, lim);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(n) * d);
  for (auto& c : coords) c = coord(rng);
  return PointSet(n, d, std::move(coords));
}

// every surjective assignment of n items to k labels, plain odometer
template <class Visit>
void for_all_surjective(int n, int k, Visit&& visit) {
  std::vector<int> a(n, 0);
  while (true) {
    std::vector<bool> used(k, false);
    for (int x : a) used[x] = true;
    bool all = true;
    for (bool u : used) all = all && u;
    if (all) visit(a);
    int i = n - 1;
    while (i >= 0 && a[i] == k - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
}

}  // namespace

TEST_CASE("exhaustive 2-means on the 4-point rectangle") {
  PointSet rect(4, 2, {0, 0, 0, 1, 4, 0, 4, 1});
  SolveReport r = brute_kmeans(rect, 2);
  REQUIRE(r.optimum.has_value());
  CHECK(*r.optimum == 1);
  CHECK(r.witness == std::vector<int>{0, 0, 1, 1});
  CHECK(r.explored == 7);  // 2^3 - 1 bipartitions with point 0 pinned
  CHECK(kmeans_cost(rect, make_clustering(2, r.witness)) == *r.optimum);
}

TEST_CASE("identical points cost zero for any cluster count") {
  PointSet same(5, 2, std::vector<std::int64_t>(10, 3));
  for (int k = 1; k <= 3; ++k) CHECK(*brute_kmeans(same, k).optimum == 0);
}

TEST_CASE("3-cluster search explores exactly the set partitions") {
  PointSet pts(4, 1, {0, 3, 9, 10});
  SolveReport r = brute_kmeans(pts, 3);
  CHECK(r.explored == 6);  // partitions of 4 items into 3 blocks
  CHECK(*r.optimum == Rational(1, 2));  // {0},{3},{9,10}
  CHECK(r.witness == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("k-means oracle agrees with a direct surjective enumeration") {
  std::mt19937_64 rng(404);
  for (int rep = 0; rep < 12; ++rep) {
    int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    PointSet pts = random_point_set(rng, n, 2, 4);
    SolveReport r = brute_kmeans(pts, 3);
    Rational best = -1;
    for_all_surjective(n, 3, [&](const std::vector<int>& a) {
      Rational c = kmeans_cost(pts, make_clustering(3, a));
      if (best < 0 || c < best) best = c;
    });
    CHECK(*r.optimum == best);
  }
}

TEST_CASE("min-sum oracle in the linear metric") {
  PointSet line(4, 1, {0, 1, 4, 5});
  SolveReport r = brute_minsum(line, 2, 1);
  REQUIRE(r.optimum.has_value());
  CHECK(*r.optimum == 2);
  CHECK(r.witness == std::vector<int>{0, 0, 1, 1});
  CHECK(r.explored == 7);
  REQUIRE(r.optimum_sym.has_value());
  CHECK(r.optimum_sym->rational_part() == 2);

  // one cluster per point costs nothing
  CHECK(*brute_minsum(line, 4, 1).optimum == 0);
}

TEST_CASE("min-sum oracle agrees with direct enumeration in l1") {
  std::mt19937_64 rng(911);
  for (int rep = 0; rep < 12; ++rep) {
    PointSet pts = random_point_set(rng, 6, 2, 6);
    SolveReport r = brute_minsum(pts, 2, 1);
    std::int64_t best = -1;
    for (int mask = 1; mask < (1 << 5); ++mask) {
      std::vector<int> side(6, 0);
      for (int i = 1; i < 6; ++i) side[i] = (mask >> (i - 1)) & 1;
      std::int64_t cost = 0;
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (side[i] == side[j]) cost += pts.lp_pow_dist(i, j, 1);
      if (best < 0 || cost < best) best = cost;
    }
    CHECK(*r.optimum == best);
  }
}

TEST_CASE("min-sum oracle handles euclidean radicals") {
  PointSet rect(4, 2, {0, 0, 0, 1, 4, 0, 4, 1});
  SolveReport r = brute_minsum(rect, 2, 2);
  REQUIRE(r.optimum.has_value());
  CHECK(*r.optimum == 2);
  CHECK(r.witness == std::vector<int>{0, 0, 1, 1});

  // isolating a right-triangle corner keeps one unit edge: rational optimum
  PointSet tri(3, 2, {0, 0, 1, 0, 0, 1});
  SolveReport t = brute_minsum(tri, 2, 2);
  REQUIRE(t.optimum.has_value());
  CHECK(*t.optimum == 1);

  // three diagonal points keep one sqrt(2) edge: the optimum stays radical
  PointSet diag(3, 2, {0, 0, 1, 1, 3, 3});
  SolveReport d = brute_minsum(diag, 2, 2);
  CHECK(!d.optimum.has_value());
  REQUIRE(d.optimum_sym.has_value());
  SymbolicSum root2(2);
  root2.add_root(2, Rational(1));
  CHECK(*d.optimum_sym == root2);
  CHECK(d.witness == std::vector<int>{0, 0, 1});
}

TEST_CASE("max-cut oracle on small graphs") {
  SolveReport c4 = brute_maxcut(unit_weights(cycle_graph(4)));
  CHECK(*c4.optimum == 4);
  CHECK(c4.witness == std::vector<int>{0, 1, 0, 1});
  CHECK(c4.explored == 8);  // 2^(n-1) sides, vertex 0 pinned

  CHECK(*brute_maxcut(unit_weights(complete_graph(4))).optimum == 4);
  CHECK(*brute_maxcut(unit_weights(petersen_graph())).optimum == 12);

  WeightedGraph triangle(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
  SolveReport t = brute_maxcut(triangle);
  CHECK(*t.optimum == 5);
  CHECK(t.witness == std::vector<int>{0, 0, 1});
  CHECK(cut_weight(triangle, t.witness) == 5);
}

TEST_CASE("max-cut oracle matches a direct mask sweep") {
  std::mt19937_64 rng(5150);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 5 + static_cast<int>(rng() % 4);
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) edges.push_back({i, j, static_cast<std::int64_t>(rng() % 7)});
    WeightedGraph g(n, edges);
    std::int64_t best = 0;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> side(n, 0);
      for (int i = 1; i < n; ++i) side[i] = (mask >> (i - 1)) & 1;
      best = std::max(best, cut_weight(g, side));
    }
    CHECK(*brute_maxcut(g).optimum == best);
  }
}

TEST_CASE("balanced bad-edge promise answers") {
  CHECK(brute_balanced_maxcut(cycle_graph(4), 0) == PromiseAnswer::kYes);
  CHECK(brute_balanced_maxcut(complete_graph(4), 1) == PromiseAnswer::kNo);
  CHECK(brute_balanced_maxcut(cycle_graph(4), 1) == PromiseAnswer::kNeither);
  CHECK(promise_answer_name(PromiseAnswer::kYes) == "yes");
  CHECK(promise_answer_name(PromiseAnswer::kNo) == "no");
  CHECK(promise_answer_name(PromiseAnswer::kNeither) == "neither");
  CHECK_THROWS_AS(brute_balanced_maxcut(cycle_graph(4), -1), PreconditionError);
}

TEST_CASE("coloring oracle") {
  CHECK(brute_coloring(cycle_graph(5), 3));
  CHECK(!brute_coloring(cycle_graph(5), 2));
  CHECK(brute_coloring(cycle_graph(4), 2));
  CHECK(!brute_coloring(complete_graph(4), 3));
  CHECK(brute_coloring(complete_graph(4), 4));
  CHECK(brute_coloring(Graph(3, {}), 1));
}

TEST_CASE("not-all-equal satisfiability oracle") {
  Cnf even_code(3, {{{0, 0}, {1, 0}, {2, 0}},
                    {{0, 0}, {1, 1}, {2, 1}},
                    {{0, 1}, {1, 0}, {2, 1}},
                    {{0, 1}, {1, 1}, {2, 0}}});
  CHECK(!brute_nae_sat(even_code));

  Cnf single(3, {{{0, 0}, {1, 0}, {2, 0}}});
  CHECK(brute_nae_sat(single));

  // dropping any one even-code clause leaves a satisfiable formula
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<Clause> reduced;
    for (int j = 0; j < 4; ++j)
      if (j != skip) reduced.push_back(even_code.clauses()[j]);
    CHECK(brute_nae_sat(Cnf(3, reduced)));
  }
}

TEST_CASE("oracle size caps refuse oversized instances") {
  OracleCaps tight;
  tight.kmeans_two_n = 4;
  tight.kmeans_k_n = 4;
  tight.cut_n = 4;
  tight.nae_vars = 2;
  tight.coloring_n = 4;
  PointSet five(5, 1, {0, 1, 2, 3, 4});
  CHECK_THROWS_AS(brute_kmeans(five, 2, tight), CapError);
  CHECK_THROWS_AS(brute_minsum(five, 2, 1, tight), CapError);
  CHECK_THROWS_AS(brute_maxcut(unit_weights(cycle_graph(5)), tight), CapError);
  CHECK_THROWS_AS(brute_balanced_maxcut(cycle_graph(5), 0, tight), CapError);
  CHECK_THROWS_AS(brute_coloring(cycle_graph(5), 2, tight), CapError);
  Cnf three(3, {{{0, 0}, {1, 0}, {2, 0}}});
  CHECK_THROWS_AS(brute_nae_sat(three, tight), CapError);

  // k = 1 needs no search, so the cap does not apply
  CHECK(*brute_kmeans(five, 1, tight).optimum == 10);
  CHECK_THROWS_AS(brute_kmeans(five, 6), PreconditionError);
}
