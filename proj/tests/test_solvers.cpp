#include "doctest.h"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "clustercut/costs.hpp"
#include "clustercut/csp.hpp"
#include "clustercut/oracles.hpp"
#include "clustercut/random_instances.hpp"
#include "clustercut/reductions.hpp"
#include "clustercut/solvers.hpp"

using namespace clustercut;

namespace {

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
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, std::move(edges));
}

}  // namespace

TEST_CASE("split specs validate their shape") {
  SplitSpec ok;
  ok.group = {0, 1, 2};
  ok.a = {1, 1, 0};
  ok.b = {0, 0, 1};
  CHECK_NOTHROW(ok.validate());

  SplitSpec lopsided = ok;
  lopsided.group = {0, 0, 0};  // sizes 3/0/0
  lopsided.a = {2, 0, 0};
  lopsided.b = {1, 0, 0};
  CHECK_THROWS_AS(lopsided.validate(), PreconditionError);

  SplitSpec mismatched = ok;
  mismatched.a = {1, 0, 0};  // a+b misses group 1's size
  CHECK_THROWS_AS(mismatched.validate(), PreconditionError);

  SplitSpec empty_cluster = ok;
  empty_cluster.a = {1, 1, 1};
  empty_cluster.b = {0, 0, 0};
  CHECK_THROWS_AS(empty_cluster.validate(), PreconditionError);

  SplitSpec bad_label = ok;
  bad_label.group = {0, 1, 3};
  CHECK_THROWS_AS(bad_label.validate(), PreconditionError);
}

TEST_CASE("split weights encode the clustering cost") {
  PointSet pts(3, 1, {0, 2, 10});
  SplitSpec split;
  split.group = {0, 1, 2};
  split.a = {1, 1, 0};  // first cluster {p0, p1}, second {p2}
  split.b = {0, 0, 1};
  Csp2Instance inst = build_csp_for_split(pts, split, 0, 4);

  for (int g = 0; g < 3; ++g) {
    REQUIRE(inst.domain_size(g) == 1);  // the signature fixes each group mask
    CHECK(inst.vertex_weights[g][0] == 0);
  }
  CHECK(inst.pair_weights[0] == std::vector<std::int64_t>{4});  // |b|*d(p0,p1)
  CHECK(inst.pair_weights[1] == std::vector<std::int64_t>{0});
  CHECK(inst.pair_weights[2] == std::vector<std::int64_t>{0});

  auto hit = solve_exact_target_naive(inst);
  REQUIRE(hit.has_value());
  // total/( |A| * |B| ) = 4/2 is exactly the 2-means cost of {p0,p1}|{p2}
  Clustering c{2, {0, 0, 1}};
  CHECK(kmeans_cost(pts, c) == make_rational(0 + 4, 2));

  inst.ke_target = 5;  // unattainable
  CHECK(!solve_exact_target_naive(inst).has_value());
}

TEST_CASE("2-means solver on hand instances") {
  PointSet rect(4, 2, {0, 0, 0, 1, 4, 0, 4, 1});
  SolveReport r = solve_2means_exact(rect);
  REQUIRE(r.optimum.has_value());
  CHECK(*r.optimum == 1);
  CHECK(r.witness == std::vector<int>{0, 0, 1, 1});
  CHECK(r.explored >= 1);

  PointSet stacked(3, 1, {0, 0, 10});
  SolveReport s = solve_2means_exact(stacked);
  CHECK(*s.optimum == 0);
  CHECK(s.witness == std::vector<int>{0, 0, 1});

  PointSet two(2, 2, {5, 5, -5, -5});
  CHECK(*solve_2means_exact(two).optimum == 0);

  EmbeddedInstance c4 = maxcut_to_2means(cycle_graph(4), 0);
  CHECK(*solve_2means_exact(c4.points).optimum == 4);
}

TEST_CASE("2-means solver matches the exhaustive oracle") {
  std::mt19937_64 rng(6021);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 4 + static_cast<int>(rng() % 7);  // 4..10
    int d = 1 + static_cast<int>(rng() % 4);
    PointSet pts = random_points(n, d, 3, 9000 + rep);
    SolveReport fast = solve_2means_exact(pts);
    SolveReport ref = brute_kmeans(pts, 2);
    CHECK(*fast.optimum == *ref.optimum);
    // the solver's witness must achieve the optimum it reports
    CHECK(kmeans_cost(pts, Clustering{2, fast.witness}) == *fast.optimum);
  }
}

TEST_CASE("kernel choice does not change 2-means answers") {
  PointSet pts = random_points(9, 3, 3, 42);
  SolveReport base = solve_2means_exact(pts);
  for (MatmulKernel kernel : {MatmulKernel::kNaive, MatmulKernel::kStrassen}) {
    SolverConfig config;
    config.kernel = kernel;
    SolveReport r = solve_2means_exact(pts, config);
    CHECK(*r.optimum == *base.optimum);
    CHECK(r.witness == base.witness);
  }
}

TEST_CASE("dense target sweep agrees with the achievable-sum walk") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    PointSet pts = random_points(6, 2, 2, seed);
    SolverConfig dense;
    dense.dense_targets = true;
    SolveReport a = solve_2means_exact(pts);
    SolveReport b = solve_2means_exact(pts, dense);
    CHECK(*a.optimum == *b.optimum);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("threaded sweep returns the single-thread answer") {
  for (std::uint64_t seed : {5u, 6u}) {
    PointSet pts = random_points(10, 3, 3, seed);
    SolverConfig threaded;
    threaded.threads = 3;
    SolveReport a = solve_2means_exact(pts);
    SolveReport b = solve_2means_exact(pts, threaded);
    CHECK(*a.optimum == *b.optimum);
    // the winning (ratio, signature) pair is deterministic, so the witness is too
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("solver diagnostics expose the domain bound") {
  PointSet rect(4, 2, {0, 0, 0, 1, 4, 0, 4, 1});
  SolveDiagnostics diag;
  OpCounters counters;
  SolverConfig config;
  config.diagnostics = &diag;
  config.counters = &counters;
  SolveReport r = solve_2means_exact(rect, config);
  CHECK(diag.signatures_total == 5);  // complement-symmetric halves are dropped
  CHECK(diag.queries >= 1);
  CHECK(diag.yes_queries >= 1);
  CHECK(diag.domain_size_bound == 8);  // 2^2 + 2^1 + 2^1
  CHECK(counters.csp_queries.load() == static_cast<std::uint64_t>(diag.queries));
  CHECK(r.explored == static_cast<std::uint64_t>(diag.queries));

  // groups never exceed ceil(n/3), so the bound stays under 3 * 2^ceil(n/3)
  for (int n : {5, 8, 11}) {
    SolveDiagnostics d2;
    SolverConfig c2;
    c2.diagnostics = &d2;
    solve_2means_exact(random_points(n, 2, 2, 70 + n), c2);
    CHECK(d2.domain_size_bound <= 3 * (std::int64_t{1} << ((n + 2) / 3)));
  }
}

TEST_CASE("2-means weight guard refuses coordinate blowups") {
  PointSet big(4, 1, {kDefaultCoordCap, 0, 0, -kDefaultCoordCap});
  CHECK_THROWS_AS(solve_2means_exact(big), CapError);
  SplitSpec split;
  split.group = {0, 1, 2, 0};
  split.a = {1, 1, 1};
  split.b = {1, 0, 0};
  CHECK_THROWS_AS(build_csp_for_split(big, split, 0, 0), CapError);
}

TEST_CASE("fast max-cut on hand graphs") {
  SolveReport c4 = solve_maxcut_fast(unit_weights(cycle_graph(4)));
  CHECK(*c4.optimum == 4);
  CHECK(c4.witness[0] == 0);
  CHECK(cut_weight(unit_weights(cycle_graph(4)), c4.witness) == 4);

  CHECK(*solve_maxcut_fast(unit_weights(complete_graph(4))).optimum == 4);
  CHECK(*solve_maxcut_fast(unit_weights(petersen_graph())).optimum == 12);

  WeightedGraph triangle(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
  SolveReport t = solve_maxcut_fast(triangle);
  CHECK(*t.optimum == 5);
  CHECK(cut_weight(triangle, t.witness) == 5);

  // no edges: the cut is empty but the solve still succeeds
  CHECK(*solve_maxcut_fast(WeightedGraph(3, {})).optimum == 0);

  SolverConfig tight;
  tight.weight_cap = 3;
  CHECK_THROWS_AS(solve_maxcut_fast(triangle, tight), CapError);
}

TEST_CASE("fast max-cut matches the exhaustive oracle") {
  std::mt19937_64 rng(31415);
  for (int rep = 0; rep < 25; ++rep) {
    int n = 3 + static_cast<int>(rng() % 8);  // 3..10
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 != 0) edges.push_back({i, j, static_cast<std::int64_t>(rng() % 9)});
    WeightedGraph g(n, edges);
    SolveReport fast = solve_maxcut_fast(g);
    SolveReport ref = brute_maxcut(g);
    CHECK(*fast.optimum == *ref.optimum);
    CHECK(cut_weight(g, fast.witness) == *fast.optimum);
  }
}

TEST_CASE("2-min-sum solver in the linear metric") {
  PointSet line(4, 1, {0, 1, 4, 5});
  SolveReport r = solve_2minsum_exact(line, 1);
  REQUIRE(r.optimum.has_value());
  CHECK(*r.optimum == 2);
  CHECK(r.witness == std::vector<int>{0, 0, 1, 1});

  PointSet twins(2, 2, {3, 3, 3, 3});
  SolveReport t = solve_2minsum_exact(twins, 1);
  CHECK(*t.optimum == 0);
  CHECK(t.witness == std::vector<int>{0, 1});  // both clusters stay nonempty

  EmbeddedInstance c4 = maxcut_to_2minsum(cycle_graph(4), 0, 1);
  CHECK(*solve_2minsum_exact(c4.points, 1).optimum == 8);
}

TEST_CASE("2-min-sum solver matches the oracle for p=1") {
  std::mt19937_64 rng(8888);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 3 + static_cast<int>(rng() % 8);  // 3..10
    int d = 1 + static_cast<int>(rng() % 3);
    PointSet pts = random_points(n, d, 6, 500 + rep);
    SolveReport fast = solve_2minsum_exact(pts, 1);
    SolveReport ref = brute_minsum(pts, 2, 1);
    CHECK(*fast.optimum == *ref.optimum);
  }
}

TEST_CASE("2-min-sum solver reports exact radical costs for p=2") {
  std::mt19937_64 rng(2718);
  for (int rep = 0; rep < 12; ++rep) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    PointSet pts = random_points(n, 2, 5, 300 + rep);
    SolveReport fast = solve_2minsum_exact(pts, 2);
    REQUIRE(fast.optimum_sym.has_value());
    SolveReport ref = brute_minsum(pts, 2, 2);
    REQUIRE(ref.optimum_sym.has_value());
    CHECK(*fast.optimum_sym == *ref.optimum_sym);
    CHECK(minsum_cost(pts, Clustering{2, fast.witness}, 2) == *fast.optimum_sym);
  }
}
