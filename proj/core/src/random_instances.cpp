#include "clustercut/random_instances.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "clustercut/errors.hpp"

namespace clustercut {

PointSet random_points(int n, int d, std::int64_t coord_max, std::uint64_t seed) {
  if (n < 1 || d < 1) throw PreconditionError("random_points: need n >= 1 and d >= 1");
  if (coord_max < 0) throw PreconditionError("random_points: coord_max must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-coord_max, coord_max);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(n) * d);
  for (auto& c : coords) c = coord(rng);
  return PointSet(n, d, std::move(coords));
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
  if (n < 1 || degree < 0 || degree >= n)
    throw PreconditionError("random_regular_graph: need 0 <= degree < n");
  if ((static_cast<std::int64_t>(n) * degree) % 2 != 0)
    throw PreconditionError("random_regular_graph: n * degree must be even");

  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * degree);
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < degree; ++s) stubs.push_back(v);

  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 5000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) { ok = false; break; }
      auto key = std::minmax(u, v);
      if (!seen.insert(key).second) { ok = false; break; }
      edges.push_back(Edge{key.first, key.second});
    }
    if (ok) return Graph(n, std::move(edges));
  }
  throw PreconditionError("random_regular_graph: no simple pairing found; degree too close to n?");
}

Cnf random_linear_4regular_cnf(int n_vars, std::uint64_t seed) {
  if (n_vars < 3 || n_vars % 3 != 0)
    throw PreconditionError("random_linear_4regular_cnf: n_vars must be a positive multiple of 3");
  const int m = 4 * n_vars / 3;

  std::vector<int> deck;
  deck.reserve(static_cast<std::size_t>(4) * n_vars);
  for (int v = 0; v < n_vars; ++v)
    for (int s = 0; s < 4; ++s) deck.push_back(v);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  constexpr int kMaxAttempts = 20000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(deck.begin(), deck.end(), rng);
    std::vector<Clause> clauses;
    clauses.reserve(m);
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      Clause c;
      for (int s = 0; s < 3; ++s)
        c.push_back(Literal{deck[static_cast<std::size_t>(3) * j + s], coin(rng)});
      std::sort(c.begin(), c.end());
      if (c[0].var == c[1].var || c[1].var == c[2].var) { ok = false; break; }
      // incremental linearity: the new clause may share at most one literal
      // with each clause already accepted
      for (const Clause& prev : clauses) {
        int shared = 0;
        for (const Literal& l : c)
          shared += static_cast<int>(std::binary_search(prev.begin(), prev.end(), l));
        if (shared > 1) { ok = false; break; }
      }
      if (ok) clauses.push_back(std::move(c));
    }
    if (!ok) continue;
    Cnf cnf(n_vars, std::move(clauses));
    cnf.validate_gadget_input();
    return cnf;
  }
  throw PreconditionError("random_linear_4regular_cnf: rejection sampling exhausted");
}

}  // namespace clustercut
