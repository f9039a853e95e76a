#include "clustercut/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace clustercut {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(std::move(cur));
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(std::move(t));
  return out;
}

std::int64_t to_i64(const std::string& tok, const std::string& file, int line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(file, line, "expected integer, got '" + tok + "'");
  return v;
}

int to_int(const std::string& tok, const std::string& file, int line) {
  std::int64_t v = to_i64(tok, file, line);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(file, line, "integer out of range: '" + tok + "'");
  return static_cast<int>(v);
}

ordered_json parse_json_doc(const std::string& text, const std::string& file) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(file, 1, std::string("invalid JSON: ") + e.what());
  }
}

[[noreturn]] void rethrow_as_parse(const std::exception& e, const std::string& file, int line) {
  throw ParseError(file, line, e.what());
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  out << content;
  if (!out) throw ParseError(path, 0, "write failed");
}

PointSet parse_points_text(const std::string& text, const std::string& filename,
                           std::int64_t coord_cap) {
  auto lines = split_lines(text);
  int n = -1, d = -1;
  std::vector<std::int64_t> coords;
  int rows_seen = 0;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    auto toks = tokens_of(lines[li]);
    if (toks.empty() || toks[0] == "c") continue;
    if (n < 0) {
      if (toks.size() != 2) throw ParseError(filename, li + 1, "expected header 'n d'");
      n = to_int(toks[0], filename, li + 1);
      d = to_int(toks[1], filename, li + 1);
      if (n < 0 || d < 1) throw ParseError(filename, li + 1, "need n >= 0 and d >= 1");
      coords.reserve(static_cast<std::size_t>(n) * d);
      continue;
    }
    if (rows_seen == n) throw ParseError(filename, li + 1, "more rows than declared");
    if (static_cast<int>(toks.size()) != d)
      throw ParseError(filename, li + 1,
                       "expected " + std::to_string(d) + " coordinates, got " +
                           std::to_string(toks.size()));
    for (const auto& t : toks) coords.push_back(to_i64(t, filename, li + 1));
    ++rows_seen;
  }
  if (n < 0) throw ParseError(filename, static_cast<int>(lines.size()), "missing header");
  if (rows_seen != n)
    throw ParseError(filename, static_cast<int>(lines.size()),
                     "declared " + std::to_string(n) + " points, found " +
                         std::to_string(rows_seen));
  try {
    return PointSet(n, d, std::move(coords), coord_cap);
  } catch (const PreconditionError& e) {
    rethrow_as_parse(e, filename, 0);
  }
}

PointSet parse_points_json(const std::string& text, const std::string& filename,
                           std::int64_t coord_cap) {
  ordered_json j = parse_json_doc(text, filename);
  try {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    const auto& rows = j.at("coords");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw ParseError(filename, 1, "coords must be an array of n rows");
    std::vector<std::int64_t> coords;
    coords.reserve(static_cast<std::size_t>(std::max(n, 0)) * std::max(d, 1));
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw ParseError(filename, 1, "each coords row must have d entries");
      for (const auto& v : row) coords.push_back(v.get<std::int64_t>());
    }
    return PointSet(n, d, std::move(coords), coord_cap);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_as_parse(e, filename, 1);
  }
}

PointSet load_points(const std::string& path, std::int64_t coord_cap) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_points_json(text, path, coord_cap);
  return parse_points_text(text, path, coord_cap);
}

std::string points_to_text(const PointSet& pts) {
  std::ostringstream os;
  os << pts.n() << " " << pts.d() << "\n";
  for (int i = 0; i < pts.n(); ++i) {
    for (int j = 0; j < pts.d(); ++j) os << (j ? " " : "") << pts.coord(i, j);
    os << "\n";
  }
  return os.str();
}

std::string points_to_json(const PointSet& pts) {
  ordered_json j;
  j["n"] = pts.n();
  j["d"] = pts.d();
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < pts.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (int t = 0; t < pts.d(); ++t) row.push_back(pts.coord(i, t));
    rows.push_back(row);
  }
  j["coords"] = rows;
  return j.dump(2);
}

RawEdgeList parse_edge_list_text(const std::string& text, const std::string& filename) {
  auto lines = split_lines(text);
  RawEdgeList out;
  int declared_m = -1;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    auto toks = tokens_of(lines[li]);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (declared_m >= 0) throw ParseError(filename, li + 1, "duplicate p line");
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError(filename, li + 1, "expected 'p edge <n> <m>'");
      out.n = to_int(toks[2], filename, li + 1);
      declared_m = to_int(toks[3], filename, li + 1);
      if (out.n < 0 || declared_m < 0) throw ParseError(filename, li + 1, "negative count");
      continue;
    }
    if (toks[0] == "e") {
      if (declared_m < 0) throw ParseError(filename, li + 1, "edge before p line");
      if (toks.size() != 3 && toks.size() != 4)
        throw ParseError(filename, li + 1, "expected 'e <u> <v> [w]'");
      int u = to_int(toks[1], filename, li + 1);
      int v = to_int(toks[2], filename, li + 1);
      if (u < 1 || u > out.n || v < 1 || v > out.n)
        throw ParseError(filename, li + 1, "vertex index out of range 1.." + std::to_string(out.n));
      out.edges.push_back(Edge{u - 1, v - 1});
      continue;
    }
    throw ParseError(filename, li + 1, "unknown line type '" + toks[0] + "'");
  }
  if (declared_m < 0) throw ParseError(filename, static_cast<int>(lines.size()), "missing p line");
  if (static_cast<int>(out.edges.size()) != declared_m)
    throw ParseError(filename, static_cast<int>(lines.size()),
                     "declared " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(out.edges.size()));
  return out;
}

namespace {

// shared scaffold for the simple/weighted readers (strict edge count, ranges)
template <class OnEdge>
void scan_graph_lines(const std::string& text, const std::string& filename, bool allow_weights,
                      int& n_out, OnEdge&& on_edge) {
  auto lines = split_lines(text);
  int n = -1, declared_m = -1, seen = 0;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    auto toks = tokens_of(lines[li]);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (declared_m >= 0) throw ParseError(filename, li + 1, "duplicate p line");
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError(filename, li + 1, "expected 'p edge <n> <m>'");
      n = to_int(toks[2], filename, li + 1);
      declared_m = to_int(toks[3], filename, li + 1);
      if (n < 0 || declared_m < 0) throw ParseError(filename, li + 1, "negative count");
      continue;
    }
    if (toks[0] == "e") {
      if (declared_m < 0) throw ParseError(filename, li + 1, "edge before p line");
      bool has_w = toks.size() == 4;
      if (toks.size() != 3 && !(allow_weights && has_w))
        throw ParseError(filename, li + 1,
                         allow_weights ? "expected 'e <u> <v> [w]'" : "expected 'e <u> <v>'");
      int u = to_int(toks[1], filename, li + 1);
      int v = to_int(toks[2], filename, li + 1);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(filename, li + 1, "vertex index out of range 1.." + std::to_string(n));
      std::int64_t w = has_w ? to_i64(toks[3], filename, li + 1) : 1;
      on_edge(u - 1, v - 1, w, li + 1);
      ++seen;
      continue;
    }
    throw ParseError(filename, li + 1, "unknown line type '" + toks[0] + "'");
  }
  if (declared_m < 0) throw ParseError(filename, static_cast<int>(lines.size()), "missing p line");
  if (seen != declared_m)
    throw ParseError(filename, static_cast<int>(lines.size()),
                     "declared " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(seen));
  n_out = n;
}

}  // namespace

Graph parse_graph_text(const std::string& text, const std::string& filename) {
  int n = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  scan_graph_lines(text, filename, false, n, [&](int u, int v, std::int64_t, int line) {
    if (u == v) throw ParseError(filename, line, "self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw ParseError(filename, line, "duplicate edge");
    edges.push_back(Edge{u, v});
  });
  return Graph(n, std::move(edges));
}

WeightedGraph parse_weighted_graph_text(const std::string& text, const std::string& filename) {
  int n = 0;
  std::vector<WeightedEdge> edges;
  std::set<std::pair<int, int>> seen;
  scan_graph_lines(text, filename, true, n, [&](int u, int v, std::int64_t w, int line) {
    if (u == v) throw ParseError(filename, line, "self-loop");
    if (w < 0) throw ParseError(filename, line, "negative edge weight");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw ParseError(filename, line, "duplicate edge");
    edges.push_back(WeightedEdge{u, v, w});
  });
  return WeightedGraph(n, std::move(edges));
}

Graph load_graph(const std::string& path) { return parse_graph_text(read_file(path), path); }

WeightedGraph load_weighted_graph(const std::string& path) {
  return parse_weighted_graph_text(read_file(path), path);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n_vertices() << " " << g.m() << "\n";
  for (const Edge& e : g.edges()) os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  return os.str();
}

std::string weighted_graph_to_text(const WeightedGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.n_vertices() << " " << g.m() << "\n";
  for (const WeightedEdge& e : g.edges())
    os << "e " << e.u + 1 << " " << e.v + 1 << " " << e.w << "\n";
  return os.str();
}

std::string edge_list_to_text(int n_vertices, const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << "p edge " << n_vertices << " " << edges.size() << "\n";
  for (const Edge& e : edges) os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  return os.str();
}

Cnf parse_cnf_text(const std::string& text, const std::string& filename) {
  auto lines = split_lines(text);
  int n_vars = -1, declared_m = -1;
  std::vector<Clause> clauses;
  Clause current;
  bool in_clause = false;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    auto toks = tokens_of(lines[li]);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n_vars >= 0) throw ParseError(filename, li + 1, "duplicate p line");
      if (toks.size() != 4 || toks[1] != "cnf")
        throw ParseError(filename, li + 1, "expected 'p cnf <vars> <clauses>'");
      n_vars = to_int(toks[2], filename, li + 1);
      declared_m = to_int(toks[3], filename, li + 1);
      if (n_vars < 0 || declared_m < 0) throw ParseError(filename, li + 1, "negative count");
      continue;
    }
    if (n_vars < 0) throw ParseError(filename, li + 1, "clause before p line");
    for (const auto& t : toks) {
      std::int64_t lit = to_i64(t, filename, li + 1);
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        in_clause = false;
        continue;
      }
      std::int64_t var = lit > 0 ? lit : -lit;
      if (var > n_vars)
        throw ParseError(filename, li + 1, "literal variable out of range 1.." +
                                               std::to_string(n_vars));
      current.push_back(Literal{static_cast<int>(var - 1), lit > 0 ? 0 : 1});
      in_clause = true;
    }
  }
  int last = static_cast<int>(lines.size());
  if (n_vars < 0) throw ParseError(filename, last, "missing p line");
  if (in_clause) throw ParseError(filename, last, "unterminated clause (missing 0)");
  if (static_cast<int>(clauses.size()) != declared_m)
    throw ParseError(filename, last, "declared " + std::to_string(declared_m) +
                                         " clauses, found " + std::to_string(clauses.size()));
  try {
    return Cnf(n_vars, std::move(clauses));
  } catch (const PreconditionError& e) {
    rethrow_as_parse(e, filename, 0);
  }
}

Cnf load_cnf(const std::string& path) { return parse_cnf_text(read_file(path), path); }

std::string cnf_to_text(const Cnf& f) {
  std::ostringstream os;
  os << "p cnf " << f.n_vars() << " " << f.m() << "\n";
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c) os << (l.sign ? -(l.var + 1) : l.var + 1) << " ";
    os << "0\n";
  }
  return os.str();
}

Csp2Instance parse_csp_json(const std::string& text, const std::string& filename) {
  ordered_json j = parse_json_doc(text, filename);
  try {
    const auto& domains = j.at("domains");
    if (!domains.is_array() || domains.size() != 3)
      throw ParseError(filename, 1, "domains must list exactly 3 sizes");
    std::array<int, 3> dom{};
    for (int i = 0; i < 3; ++i) dom[i] = domains[i].get<int>();
    Csp2Instance inst;
    const auto& vw = j.at("vertex_weights");
    if (!vw.is_array() || vw.size() != 3)
      throw ParseError(filename, 1, "vertex_weights must list exactly 3 tables");
    for (int i = 0; i < 3; ++i) {
      if (static_cast<int>(vw[i].size()) != dom[i])
        throw ParseError(filename, 1, "vertex_weights[" + std::to_string(i) +
                                          "] does not match its domain size");
      for (const auto& v : vw[i]) inst.vertex_weights[i].push_back(v.get<std::int64_t>());
    }
    const auto& pw = j.at("pair_weights");
    const char* keys[3] = {"12", "23", "13"};
    for (int p = 0; p < 3; ++p) {
      int di = dom[kCspPairs[p][0]], dj = dom[kCspPairs[p][1]];
      const auto& table = pw.at(keys[p]);
      if (!table.is_array() || static_cast<int>(table.size()) != di)
        throw ParseError(filename, 1, std::string("pair_weights.") + keys[p] +
                                          " must have one row per left domain value");
      for (const auto& row : table) {
        if (!row.is_array() || static_cast<int>(row.size()) != dj)
          throw ParseError(filename, 1, std::string("pair_weights.") + keys[p] + " row width "
                                            "does not match right domain size");
        for (const auto& v : row) inst.pair_weights[p].push_back(v.get<std::int64_t>());
      }
    }
    inst.kv_target = j.at("K_v").get<std::int64_t>();
    inst.ke_target = j.at("K_e").get<std::int64_t>();
    if (j.contains("weight_cap")) inst.weight_cap = j.at("weight_cap").get<std::int64_t>();
    inst.validate();
    return inst;
  } catch (const ParseError&) {
    throw;
  } catch (const CapError&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_as_parse(e, filename, 1);
  }
}

Csp2Instance load_csp(const std::string& path) { return parse_csp_json(read_file(path), path); }

std::string csp_to_json(const Csp2Instance& inst) {
  ordered_json j;
  j["domains"] = {inst.domain_size(0), inst.domain_size(1), inst.domain_size(2)};
  ordered_json vw = ordered_json::array();
  for (int i = 0; i < 3; ++i) vw.push_back(inst.vertex_weights[i]);
  j["vertex_weights"] = vw;
  ordered_json pw;
  const char* keys[3] = {"12", "23", "13"};
  for (int p = 0; p < 3; ++p) {
    int di = inst.domain_size(kCspPairs[p][0]), dj = inst.domain_size(kCspPairs[p][1]);
    ordered_json table = ordered_json::array();
    for (int a = 0; a < di; ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < dj; ++b) row.push_back(inst.pair_weight(p, a, b));
      table.push_back(row);
    }
    pw[keys[p]] = table;
  }
  j["pair_weights"] = pw;
  j["K_v"] = inst.kv_target;
  j["K_e"] = inst.ke_target;
  return j.dump(2);
}

}  // namespace clustercut
