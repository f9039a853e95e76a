#include "doctest.h"

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "clustercut/costs.hpp"
#include "clustercut/io.hpp"
#include "clustercut/oracles.hpp"
#include "clustercut/random_instances.hpp"
#include "clustercut/reductions.hpp"

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

Clustering make_clustering(int k, std::vector<int> assignment) {
  return Clustering{k, std::move(assignment)};
}

// all bipartitions with both sides nonempty, vertex 0 pinned to side 0
template <class Visit>
void for_all_bipartitions(int n, Visit&& visit) {
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<int> side(n, 0);
    for (int i = 1; i < n; ++i) side[i] = static_cast<int>((mask >> (i - 1)) & 1);
    visit(side);
  }
}

Cnf even_code_cnf() {
  return Cnf(3, {{{0, 0}, {1, 0}, {2, 0}},
                 {{0, 0}, {1, 1}, {2, 1}},
                 {{0, 1}, {1, 0}, {2, 1}},
                 {{0, 1}, {1, 1}, {2, 0}}});
}

}  // namespace

TEST_CASE("cycle embedding decides the balanced bad-edge question") {
  Graph c4 = cycle_graph(4);
  EmbeddedInstance inst = maxcut_to_2means(c4, 0);
  CHECK(inst.points.n() == 4);
  CHECK(inst.points.d() == 4);  // one coordinate per edge
  CHECK(inst.threshold_rational() == 4);  // n*d - 2*d with n=4, d=2
  CHECK(inst.provenance == "maxcut-to-2means");
  REQUIRE(inst.orientation.size() == 4);

  SolveReport r = brute_kmeans(inst.points, 2);
  CHECK(*r.optimum == 4);  // the alternating bipartition has no bad edges
  CHECK(r.witness == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("complete-graph embedding meets its shifted threshold") {
  EmbeddedInstance inst = maxcut_to_2means(complete_graph(4), 2);
  CHECK(inst.threshold_rational() == 8);  // 4*3 - 2*3 + 4*2/4
  CHECK(*brute_kmeans(inst.points, 2).optimum == 8);

  EmbeddedInstance lone = maxcut_to_2means(Graph(2, {{0, 1}}), 0);
  CHECK(lone.threshold_rational() == 0);
  CHECK(*brute_kmeans(lone.points, 2).optimum == 0);
}

TEST_CASE("embedded pair distances split into two classes") {
  for (const Graph& g : {cycle_graph(6), complete_graph(4)}) {
    int d = *g.regular_degree();
    EmbeddedInstance inst = maxcut_to_2means(g, 0);
    for (int p = 1; p <= 3; ++p) {
      std::int64_t near = 2 * d;
      std::int64_t adj = 2 * d + (std::int64_t{1} << p) - 2;
      for (int u = 0; u < g.n_vertices(); ++u)
        for (int v = u + 1; v < g.n_vertices(); ++v)
          CHECK(inst.points.lp_pow_dist(u, v, p) == (g.adjacent(u, v) ? adj : near));
    }
  }
}

TEST_CASE("closed-form 2-means cost matches the embedding exactly") {
  std::vector<Graph> graphs;
  graphs.push_back(cycle_graph(6));
  graphs.push_back(complete_graph(4));
  graphs.push_back(random_regular_graph(8, 3, 5));
  graphs.push_back(random_regular_graph(10, 4, 17));
  for (const Graph& g : graphs) {
    EmbeddedInstance inst = maxcut_to_2means(g, 0);
    for_all_bipartitions(g.n_vertices(), [&](const std::vector<int>& side) {
      Clustering c = make_clustering(2, side);
      CHECK(kmeans_cost(inst.points, c) == predicted_2means_cost(g, side));
    });
  }
}

TEST_CASE("edge orientation never changes clustering costs") {
  Graph g = random_regular_graph(8, 3, 23);
  EmbeddedInstance fixed = maxcut_to_2means(g, 0);
  EmbeddedInstance shuffled = maxcut_to_2means(g, 0, EdgeOrientation::kRandomized, 99);
  // the randomized orientation must actually flip something for the check to bite
  CHECK(fixed.orientation != shuffled.orientation);
  std::set<std::pair<int, int>> fixed_pairs, shuffled_pairs;
  for (auto [a, b] : fixed.orientation) fixed_pairs.insert(std::minmax(a, b));
  for (auto [a, b] : shuffled.orientation) shuffled_pairs.insert(std::minmax(a, b));
  CHECK(fixed_pairs == shuffled_pairs);
  for_all_bipartitions(g.n_vertices(), [&](const std::vector<int>& side) {
    Clustering c = make_clustering(2, side);
    CHECK(kmeans_cost(fixed.points, c) == kmeans_cost(shuffled.points, c));
  });
}

TEST_CASE("coloring embeddings hit the k-cluster threshold exactly when colorable") {
  EmbeddedInstance c5 = coloring_to_kmeans(cycle_graph(5), 3);
  CHECK(c5.threshold_rational() == 4);  // 5*2 - 3*2
  CHECK(*brute_kmeans(c5.points, 3).optimum == 4);

  EmbeddedInstance k3 = coloring_to_kmeans(complete_graph(3), 3);
  CHECK(k3.threshold_rational() == 0);
  CHECK(*brute_kmeans(k3.points, 3).optimum == 0);

  // K4 is not 3-colorable: the optimum stays strictly above the threshold
  EmbeddedInstance k4 = coloring_to_kmeans(complete_graph(4), 3);
  CHECK(k4.threshold_rational() == 3);  // 4*3 - 3*3
  CHECK(*brute_kmeans(k4.points, 3).optimum == 4);
}

TEST_CASE("min-sum embedding thresholds") {
  Graph c4 = cycle_graph(4);
  EmbeddedInstance p1 = maxcut_to_2minsum(c4, 0, 1);
  CHECK(p1.threshold_rational() == 8);  // 2d * (n^2-2n)/4 with d=2, n=4
  SolveReport r1 = brute_minsum(p1.points, 2, 1);
  CHECK(*r1.optimum == 8);
  // at p=1 both distance classes coincide, so every balanced split ties
  CHECK(r1.witness == std::vector<int>{0, 0, 1, 1});

  // p=2 on a 2-regular graph: sqrt(4) folds, the threshold is plain rational
  EmbeddedInstance p2 = maxcut_to_2minsum(c4, 0, 2);
  CHECK(p2.threshold_rational() == 4);
  CHECK(*brute_minsum(p2.points, 2, 2).optimum == 4);

  // K4 with t=2 keeps a radical: threshold 4*sqrt(2)
  EmbeddedInstance k4 = maxcut_to_2minsum(complete_graph(4), 2, 2);
  SymbolicSum want(2);
  want.add_root(2, Rational(4));
  CHECK(k4.threshold == want);
  CHECK_THROWS_AS(k4.threshold_rational(), PreconditionError);
  SolveReport rk = brute_minsum(k4.points, 2, 2);
  REQUIRE(rk.optimum_sym.has_value());
  CHECK(*rk.optimum_sym == want);
}

TEST_CASE("closed-form min-sum cost matches the embedding symbolically") {
  for (const Graph& g : {cycle_graph(6), complete_graph(4)}) {
    for (int p = 1; p <= 2; ++p) {
      EmbeddedInstance inst = maxcut_to_2minsum(g, 0, p);
      for_all_bipartitions(g.n_vertices(), [&](const std::vector<int>& side) {
        Clustering c = make_clustering(2, side);
        CHECK(minsum_cost(inst.points, c, p) == predicted_2minsum_cost(g, side, p));
      });
    }
  }
}

TEST_CASE("within plus crossing distances conserve the total") {
  for (int p = 1; p <= 3; ++p) {
    PointSet pts = random_points(7, 3, 5, 1000 + p);
    SymbolicSum total = minsum_cost(pts, make_clustering(1, std::vector<int>(7, 0)), p);
    for_all_bipartitions(7, [&](const std::vector<int>& side) {
      SymbolicSum within = minsum_cost(pts, make_clustering(2, side), p);
      SymbolicSum crossing(p);
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
          if (side[i] != side[j]) crossing.add_root(pts.lp_pow_dist(i, j, p), Rational(1));
      CHECK(within + crossing == total);
    });
  }
}

TEST_CASE("min-sum instances become weighted max-cut instances") {
  PointSet line(4, 1, {0, 1, 4, 5});
  MinsumReductionResult red = minsum_to_maxcut(line, 1);
  CHECK(red.exact);
  CHECK(red.scale == 1);
  CHECK(red.graph.m() == 6);  // complete graph on 4 points
  CHECK(red.graph.total_weight() == 18);
  SolveReport mc = brute_maxcut(red.graph);
  CHECK(*mc.optimum == 16);
  // min-sum optimum = total weight - max cut
  CHECK(*brute_minsum(line, 2, 1).optimum == 18 - 16);

  MinsumReductionResult rounded = minsum_to_maxcut(PointSet(3, 2, {0, 0, 1, 0, 0, 1}), 2);
  CHECK(!rounded.exact);
  CHECK(rounded.scale == 1000000);
  CHECK(rounded.graph.edges()[0].w == 1000000);  // unit distance
  CHECK(rounded.graph.edges()[2].w == 1414214);  // sqrt(2), rounded

  CHECK_THROWS_AS(minsum_to_maxcut(line, 1, 4), CapError);  // weight 5 above cap
}

TEST_CASE("gadget shape for the even-code formula") {
  GadgetGraph g = nae3sat_to_maxcut(even_code_cnf());
  CHECK(g.n_vars == 3);
  CHECK(g.n_clauses == 4);
  CHECK(g.n_vertices == 24);
  CHECK(g.slot_count() == 144);  // 24 slots per clause + 16 per variable
  CHECK(g.t == 32);
  REQUIRE(g.clause_families.size() == 16);
  for (const auto& fam : g.clause_families) CHECK(fam.count == 6);
  REQUIRE(g.variable_families.size() == 3);
  for (const auto& fam : g.variable_families) CHECK(fam.count == 16);
  for (int deg : g.degrees_with_multiplicity()) CHECK(deg == 12);
  // this instance repeats vertex pairs across slots, so it is not parallel-free
  CHECK(!g.parallel_free);

  // families tile the slot list
  std::vector<bool> covered(g.slot_count(), false);
  auto mark = [&](const GadgetGraph::Family& f) {
    for (int s = f.offset; s < f.offset + f.count; ++s) {
      CHECK(!covered[s]);
      covered[s] = true;
    }
  };
  for (const auto& f : g.clause_families) mark(f);
  for (const auto& f : g.variable_families) mark(f);
  for (bool c : covered) CHECK(c);
}

TEST_CASE("satisfying assignments induce balanced minimum-bad cuts") {
  // scan a few seeds for a satisfiable draw; random instances this sparse
  // are satisfiable almost always
  Cnf f(0, {});
  bool have = false;
  for (std::uint64_t seed = 1; seed <= 25 && !have; ++seed) {
    Cnf candidate = random_linear_4regular_cnf(6, seed);
    if (brute_nae_sat(candidate)) {
      f = candidate;
      have = true;
    }
  }
  REQUIRE(have);
  CHECK_NOTHROW(f.validate_gadget_input());
  GadgetGraph g = nae3sat_to_maxcut(f);
  CHECK(g.n_vertices == 48);
  CHECK(g.t == 64);  // 8 * m with m = 8

  // find a witnessing assignment directly
  std::vector<int> values(6, 0);
  bool found = false;
  for (int mask = 0; mask < 64 && !found; ++mask) {
    for (int i = 0; i < 6; ++i) values[i] = (mask >> i) & 1;
    bool ok = true;
    for (const Clause& c : f.clauses()) {
      int sum = 0;
      for (const Literal& l : c) sum += values[l.var] ^ l.sign;
      if (sum == 0 || sum == 3) ok = false;
    }
    found = ok;
  }
  REQUIRE(found);

  std::vector<int> side = gadget_cut_from_assignment(g, values);
  BadEdgeBoundReport rep = verify_badedge_bound(g, side);
  CHECK(rep.balanced);
  CHECK(rep.beta == g.t);
  CHECK(rep.holds);
  CHECK(rep.equality);
  CHECK(rep.families_at_equality);
}

TEST_CASE("bad-edge lower bound holds across sampled bipartitions") {
  GadgetGraph g = nae3sat_to_maxcut(even_code_cnf());
  std::mt19937_64 rng(8080);
  int balanced_seen = 0;
  for (int rep = 0; rep < 600; ++rep) {
    std::vector<int> side(g.n_vertices);
    for (int& s : side) s = static_cast<int>(rng() & 1);
    BadEdgeBoundReport report = verify_badedge_bound(g, side);
    CHECK(report.holds);
    if (report.balanced) {
      ++balanced_seen;
      // the even-code formula is unsatisfiable: no balanced cut reaches t
      CHECK(report.beta > g.t);
    }
  }
  CHECK(balanced_seen > 10);

  // an assignment-induced cut is balanced but pays for the violated clause
  std::vector<int> side = gadget_cut_from_assignment(g, std::vector<int>{0, 0, 0});
  BadEdgeBoundReport report = verify_badedge_bound(g, side);
  CHECK(report.balanced);
  CHECK(report.beta > g.t);
  CHECK(report.beta == g.t + 16);  // one clause family per copy pays 6 instead of 2
}

TEST_CASE("reduction preconditions") {
  Graph path(3, {{0, 1}, {1, 2}});  // not regular
  CHECK_THROWS_AS(maxcut_to_2means(path, 0), PreconditionError);
  CHECK_THROWS_AS(maxcut_to_2means(cycle_graph(5), 0), PreconditionError);  // odd n
  CHECK_THROWS_AS(maxcut_to_2means(cycle_graph(4), 5), PreconditionError);  // t > m
  CHECK_THROWS_AS(maxcut_to_2means(Graph(4, {}), 0), PreconditionError);    // no edges
  CHECK_THROWS_AS(coloring_to_kmeans(cycle_graph(4), 1), PreconditionError);
  CHECK_THROWS_AS(maxcut_to_2minsum(cycle_graph(4), 0, 0), PreconditionError);
  CHECK_THROWS_AS(predicted_2means_cost(path, std::vector<int>{0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(predicted_2means_cost(cycle_graph(4), std::vector<int>{0, 0, 0, 0}),
                  PreconditionError);  // empty part

  Cnf not_regular(3, {{{0, 0}, {1, 0}, {2, 0}}});
  CHECK_THROWS_AS(nae3sat_to_maxcut(not_regular), PreconditionError);
  GadgetGraph g = nae3sat_to_maxcut(even_code_cnf());
  CHECK_THROWS_AS(gadget_cut_from_assignment(g, std::vector<int>{0, 1}), PreconditionError);
  CHECK_THROWS_AS(gadget_cut_from_assignment(g, std::vector<int>{0, 1, 2}), PreconditionError);
}

TEST_CASE("instance generators are deterministic and valid") {
  PointSet a = random_points(9, 3, 4, 31);
  PointSet b = random_points(9, 3, 4, 31);
  CHECK(a.coords() == b.coords());
  CHECK(a.max_abs_coord() <= 4);
  CHECK(random_points(9, 3, 4, 32).coords() != a.coords());

  Graph g = random_regular_graph(10, 3, 7);
  CHECK(g.is_regular(3));
  CHECK(random_regular_graph(10, 3, 7).edges() == g.edges());
  CHECK_THROWS_AS(random_regular_graph(5, 3, 1), PreconditionError);  // odd stub count
  CHECK_THROWS_AS(random_regular_graph(4, 4, 1), PreconditionError);  // degree >= n

  Cnf f = random_linear_4regular_cnf(9, 3);
  CHECK(f.n_vars() == 9);
  CHECK(f.m() == 12);
  CHECK_NOTHROW(f.validate_gadget_input());
  CHECK(cnf_to_text(f) == cnf_to_text(random_linear_4regular_cnf(9, 3)));
  CHECK_THROWS_AS(random_linear_4regular_cnf(7, 1), PreconditionError);  // not divisible by 3
}
