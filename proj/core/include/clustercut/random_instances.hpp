#pragma once

#include <cstdint>

#include "clustercut/cnf.hpp"
#include "clustercut/graph.hpp"
#include "clustercut/point_set.hpp"

namespace clustercut {

// n points in Z^d with coordinates drawn uniformly from [-coord_max, coord_max].
PointSet random_points(int n, int d, std::int64_t coord_max, std::uint64_t seed);

// Simple d-regular graph sampled with the configuration model: pair up
// degree stubs per vertex, reshuffling until the pairing has no loops or
// parallel edges.  Requires 0 <= degree < n and n * degree even.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

// 3-uniform, linear, 4-regular CNF over n_vars variables (n_vars divisible
// by 3, giving 4*n_vars/3 clauses).  Sampled by shuffling a deck with four
// slots per variable into clauses and rejecting draws that repeat a variable
// inside a clause or let two clauses share more than one literal.
Cnf random_linear_4regular_cnf(int n_vars, std::uint64_t seed);

}  // namespace clustercut
