#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clustercut/cnf.hpp"
#include "clustercut/csp.hpp"
#include "clustercut/graph.hpp"
#include "clustercut/point_set.hpp"

namespace clustercut {

// All parsers throw ParseError carrying file name and 1-based line number.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Point file: header "n d", then n rows of d integers. load_points also
// accepts a JSON document {"n":..,"d":..,"coords":[[..],..]} (sniffed on '{').
PointSet parse_points_text(const std::string& text, const std::string& filename = "<points>",
                           std::int64_t coord_cap = kDefaultCoordCap);
PointSet parse_points_json(const std::string& text, const std::string& filename = "<points>",
                           std::int64_t coord_cap = kDefaultCoordCap);
PointSet load_points(const std::string& path, std::int64_t coord_cap = kDefaultCoordCap);
std::string points_to_text(const PointSet& pts);
std::string points_to_json(const PointSet& pts);

// DIMACS-like graph: comment lines "c ...", one "p edge <n> <m>" line, then m
// lines "e <u> <v>" (1-based endpoints); the weighted reader also accepts
// "e <u> <v> <w>" and defaults missing weights to 1.
Graph parse_graph_text(const std::string& text, const std::string& filename = "<graph>");
WeightedGraph parse_weighted_graph_text(const std::string& text,
                                        const std::string& filename = "<graph>");
Graph load_graph(const std::string& path);
WeightedGraph load_weighted_graph(const std::string& path);
std::string graph_to_text(const Graph& g);
std::string weighted_graph_to_text(const WeightedGraph& g);

// Same file format but tolerating repeated edges: used for gadget slot lists,
// which are edge multisets. Endpoints are returned 0-based in file order.
struct RawEdgeList {
  int n = 0;
  std::vector<Edge> edges;
};
RawEdgeList parse_edge_list_text(const std::string& text, const std::string& filename = "<graph>");
std::string edge_list_to_text(int n_vertices, const std::vector<Edge>& edges);

// DIMACS CNF: "p cnf <vars> <clauses>", clauses as 0-terminated literal runs.
// Positive literal i means variable i-1 unnegated.
Cnf parse_cnf_text(const std::string& text, const std::string& filename = "<cnf>");
Cnf load_cnf(const std::string& path);
std::string cnf_to_text(const Cnf& f);

// Three-variable weighted 2-CSP instance as JSON:
// {"domains":[d1,d2,d3], "vertex_weights":[[..],[..],[..]],
//  "pair_weights":{"12":[[..]..],"23":..,"13":..}, "K_v":t, "K_e":t}
Csp2Instance parse_csp_json(const std::string& text, const std::string& filename = "<csp>");
Csp2Instance load_csp(const std::string& path);
std::string csp_to_json(const Csp2Instance& inst);

}  // namespace clustercut
