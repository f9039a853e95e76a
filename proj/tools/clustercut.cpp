// Command-line front end: exact solvers, brute-force oracles, reduction
// generators with JSON sidecars, verifiers, seeded instance generators, and
// the benchmark sweeps. Exit codes: 0 ok, 1 verifier found violations,
// 2 parse error, 3 cap exceeded, 4 precondition failed.
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clustercut/bench.hpp"
#include "clustercut/cnf.hpp"
#include "clustercut/costs.hpp"
#include "clustercut/csp.hpp"
#include "clustercut/errors.hpp"
#include "clustercut/graph.hpp"
#include "clustercut/io.hpp"
#include "clustercut/oracles.hpp"
#include "clustercut/point_set.hpp"
#include "clustercut/random_instances.hpp"
#include "clustercut/rational.hpp"
#include "clustercut/reductions.hpp"
#include "clustercut/report.hpp"
#include "clustercut/solvers.hpp"
#include "clustercut/symbolic_sum.hpp"

namespace cc = clustercut;
using ordered_json = nlohmann::ordered_json;

namespace {

std::int64_t env_int64(const char* name, std::int64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t used = 0;
    const std::int64_t parsed = std::stoll(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return parsed;
  } catch (const std::exception&) {
    throw cc::ParseError(std::string("environment variable ") + name + " is not an integer: " + v);
  }
}

cc::OracleCaps oracle_caps_from_env() {
  cc::OracleCaps caps;
  caps.kmeans_two_n = static_cast<int>(env_int64("CLUSTERCUT_KMEANS2_N", caps.kmeans_two_n));
  caps.kmeans_k_n = static_cast<int>(env_int64("CLUSTERCUT_KMEANSK_N", caps.kmeans_k_n));
  caps.cut_n = static_cast<int>(env_int64("CLUSTERCUT_CUT_N", caps.cut_n));
  caps.nae_vars = static_cast<int>(env_int64("CLUSTERCUT_NAE_VARS", caps.nae_vars));
  caps.coloring_n = static_cast<int>(env_int64("CLUSTERCUT_COLORING_N", caps.coloring_n));
  return caps;
}

void apply_env_caps(cc::SolverConfig& config) {
  config.weight_cap = env_int64("CLUSTERCUT_WEIGHT_CAP", config.weight_cap);
  config.max_table_entries = static_cast<std::size_t>(
      env_int64("CLUSTERCUT_MAX_TABLE_ENTRIES", static_cast<std::int64_t>(config.max_table_entries)));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    cc::write_file(out_path, text);
  }
}

std::string default_output(const std::string& input, const char* extension) {
  std::filesystem::path p(input);
  p.replace_extension(extension);
  return p.string();
}

ordered_json orientation_json(const std::vector<std::pair<int, int>>& orientation) {
  ordered_json arr = ordered_json::array();
  for (const auto& [tail, head] : orientation) arr.push_back({tail, head});
  return arr;
}

ordered_json symbolic_json(const cc::SymbolicSum& s) {
  ordered_json terms = ordered_json::array();
  for (const auto& [radicand, coeff] : s.root_terms())
    terms.push_back({{"radicand", radicand},
                     {"coeff_num", cc::rat_num(coeff).str()},
                     {"coeff_den", cc::rat_den(coeff).str()}});
  return ordered_json{{"p", s.metric_exponent()},
                      {"rational_num", cc::rat_num(s.rational_part()).str()},
                      {"rational_den", cc::rat_den(s.rational_part()).str()},
                      {"terms", terms},
                      {"value", s.value()},
                      {"text", s.str()}};
}

// shared flags for the solve/bench family
struct SolveFlags {
  std::string input;
  std::string output;
  std::string algo;
  std::string kernel = "bitpacked";
  int threads = 1;
  bool counters = false;
  bool dense_targets = false;
};

void add_solver_flags(CLI::App* cmd, SolveFlags& f, const std::string& default_algo,
                      const std::vector<std::string>& algos) {
  f.algo = default_algo;
  cmd->add_option("input", f.input, "input file")->required();
  cmd->add_option("-o,--output", f.output, "write the JSON report here instead of stdout");
  cmd->add_option("--algo", f.algo, "algorithm")->check(CLI::IsMember(algos));
  cmd->add_option("--kernel", f.kernel, "matrix kernel")
      ->check(CLI::IsMember({"naive", "strassen", "bitpacked"}));
  cmd->add_option("--threads", f.threads, "worker threads for the signature sweep")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--counters", f.counters, "append operation counters to the report");
  cmd->add_flag("--dense-targets", f.dense_targets,
                "query every integer target pair instead of achievable sums (tiny inputs)");
}

cc::SolverConfig make_config(const SolveFlags& f, cc::OpCounters* counters,
                             cc::SolveDiagnostics* diag = nullptr) {
  cc::SolverConfig config;
  config.kernel = cc::kernel_from_name(f.kernel);
  config.threads = f.threads;
  config.dense_targets = f.dense_targets;
  config.counters = counters;
  config.diagnostics = diag;
  apply_env_caps(config);
  return config;
}

void emit_report(const cc::SolveReport& report, const SolveFlags& flags,
                 const cc::OpCounters& counters) {
  if (flags.counters) {
    const cc::CounterSnapshot snap = counters.snapshot();
    emit(cc::report_to_json(report, &snap), flags.output);
  } else {
    emit(cc::report_to_json(report), flags.output);
  }
}

void run_solve_2means(const SolveFlags& flags) {
  const cc::PointSet pts = cc::load_points(flags.input);
  cc::OpCounters counters;
  cc::SolveReport report;
  if (flags.algo == "csp")
    report = cc::solve_2means_exact(pts, make_config(flags, &counters));
  else
    report = cc::brute_kmeans(pts, 2, oracle_caps_from_env());
  emit_report(report, flags, counters);
}

void run_solve_2minsum(const SolveFlags& flags, int p) {
  const cc::PointSet pts = cc::load_points(flags.input);
  cc::OpCounters counters;
  cc::SolveReport report;
  if (flags.algo == "maxcut")
    report = cc::solve_2minsum_exact(pts, p, make_config(flags, &counters));
  else
    report = cc::brute_minsum(pts, 2, p, oracle_caps_from_env());
  emit_report(report, flags, counters);
}

void run_solve_maxcut(const SolveFlags& flags) {
  const cc::WeightedGraph g = cc::load_weighted_graph(flags.input);
  cc::OpCounters counters;
  cc::SolveReport report;
  if (flags.algo == "fast")
    report = cc::solve_maxcut_fast(g, make_config(flags, &counters));
  else
    report = cc::brute_maxcut(g, oracle_caps_from_env());
  emit_report(report, flags, counters);
}

void run_solve_kmeans(const SolveFlags& flags, int k) {
  const cc::PointSet pts = cc::load_points(flags.input);
  const cc::SolveReport report = cc::brute_kmeans(pts, k, oracle_caps_from_env());
  emit(cc::report_to_json(report), flags.output);
}

void run_solve_balanced_maxcut(const std::string& input, std::int64_t t, const std::string& output) {
  const cc::Graph g = cc::load_graph(input);
  const cc::PromiseAnswer answer = cc::brute_balanced_maxcut(g, t, oracle_caps_from_env());
  emit(ordered_json{{"answer", cc::promise_answer_name(answer)}, {"t", t}}.dump(2), output);
}

void run_solve_coloring(const std::string& input, int k, const std::string& output) {
  const cc::Graph g = cc::load_graph(input);
  const bool ok = cc::brute_coloring(g, k, oracle_caps_from_env());
  emit(ordered_json{{"k", k}, {"colorable", ok}}.dump(2), output);
}

void run_solve_nae(const std::string& input, const std::string& output) {
  const cc::Cnf f = cc::load_cnf(input);
  const bool ok = cc::brute_nae_sat(f, oracle_caps_from_env());
  emit(ordered_json{{"nae_satisfiable", ok}}.dump(2), output);
}

void run_csp_solve(const std::string& input, const std::string& algo, const std::string& kernel,
                   const std::string& output) {
  const cc::Csp2Instance inst = cc::load_csp(input);
  std::optional<cc::CspAssignment> witness;
  if (algo == "naive")
    witness = cc::solve_exact_target_naive(inst);
  else
    witness = cc::solve_exact_target(inst, cc::kernel_from_name(kernel));
  ordered_json doc;
  doc["satisfiable"] = witness.has_value();
  if (witness) {
    doc["assignment"] = {witness->value[0], witness->value[1], witness->value[2]};
    doc["vertex_total"] = inst.assignment_vertex_total(witness->value);
    doc["pair_total"] = inst.assignment_pair_total(witness->value);
  }
  emit(doc.dump(2), output);
}

cc::EdgeOrientation orientation_from_name(const std::string& name) {
  return name == "random" ? cc::EdgeOrientation::kRandomized : cc::EdgeOrientation::kLowToHigh;
}

struct ReduceFlags {
  std::string input;
  std::string output;
  std::string orientation = "low-high";
  std::uint64_t seed = 0;
  std::int64_t t = 0;
  int k = 3;
  int p = 1;
};

void emit_reduce_summary(const std::string& reduction, const std::string& instance_path,
                         const std::string& sidecar_path, ordered_json extra) {
  ordered_json doc{{"reduction", reduction}, {"instance", instance_path}, {"sidecar", sidecar_path}};
  for (auto& [key, value] : extra.items()) doc[key] = value;
  std::cout << doc.dump(2) << '\n';
}

void run_reduce_embedding(const std::string& reduction, const ReduceFlags& flags) {
  const cc::Graph g = cc::load_graph(flags.input);
  const cc::EdgeOrientation orient = orientation_from_name(flags.orientation);
  cc::EmbeddedInstance embedded = [&] {
    if (reduction == "maxcut-to-2means") return cc::maxcut_to_2means(g, flags.t, orient, flags.seed);
    if (reduction == "coloring-to-kmeans")
      return cc::coloring_to_kmeans(g, flags.k, orient, flags.seed);
    return cc::maxcut_to_2minsum(g, flags.t, flags.p, orient, flags.seed);
  }();

  const std::string out = flags.output.empty() ? default_output(flags.input, ".points") : flags.output;
  const std::string sidecar = out + ".json";
  cc::write_file(out, cc::points_to_text(embedded.points));

  ordered_json side{{"reduction", reduction},
                    {"n_points", embedded.points.n()},
                    {"dim", embedded.points.d()}};
  if (reduction == "maxcut-to-2means") side["t"] = flags.t;
  if (reduction == "coloring-to-kmeans") side["k"] = flags.k;
  if (reduction == "maxcut-to-2minsum") {
    side["t"] = flags.t;
    side["p"] = flags.p;
  }
  if (embedded.threshold.is_rational()) {
    const cc::Rational thr = embedded.threshold_rational();
    side["threshold_num"] = cc::rat_num(thr).str();
    side["threshold_den"] = cc::rat_den(thr).str();
  } else {
    side["threshold"] = symbolic_json(embedded.threshold);
  }
  side["orientation"] = orientation_json(embedded.orientation);
  cc::write_file(sidecar, side.dump(2) + "\n");

  ordered_json extra{{"n_points", embedded.points.n()}, {"dim", embedded.points.d()}};
  emit_reduce_summary(reduction, out, sidecar, extra);
}

void run_reduce_minsum_to_maxcut(const ReduceFlags& flags) {
  const cc::PointSet pts = cc::load_points(flags.input);
  cc::SolverConfig guard;
  apply_env_caps(guard);
  const cc::MinsumReductionResult red = cc::minsum_to_maxcut(pts, flags.p, guard.weight_cap);

  const std::string out = flags.output.empty() ? default_output(flags.input, ".graph") : flags.output;
  const std::string sidecar = out + ".json";
  cc::write_file(out, cc::weighted_graph_to_text(red.graph));
  cc::write_file(sidecar, ordered_json{{"reduction", "minsum-to-maxcut"},
                                       {"p", red.p},
                                       {"scale", red.scale},
                                       {"exact", red.exact},
                                       {"total_weight", red.graph.total_weight()}}
                              .dump(2) +
                              "\n");
  emit_reduce_summary("minsum-to-maxcut", out, sidecar,
                      ordered_json{{"n_vertices", red.graph.n_vertices()},
                                   {"total_weight", red.graph.total_weight()},
                                   {"exact", red.exact}});
}

ordered_json families_json(const std::vector<cc::GadgetGraph::Family>& families) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : families) arr.push_back({{"offset", f.offset}, {"count", f.count}});
  return arr;
}

ordered_json clauses_json(const cc::Cnf& f) {
  ordered_json arr = ordered_json::array();
  for (const cc::Clause& c : f.clauses()) {
    ordered_json lits = ordered_json::array();
    for (const cc::Literal& l : c) lits.push_back(l.sign == 0 ? l.var + 1 : -(l.var + 1));
    arr.push_back(lits);
  }
  return arr;
}

void run_reduce_nae3sat(const ReduceFlags& flags) {
  const cc::Cnf f = cc::load_cnf(flags.input);
  const cc::GadgetGraph gadget = cc::nae3sat_to_maxcut(f);

  const std::string out = flags.output.empty() ? default_output(flags.input, ".graph") : flags.output;
  const std::string sidecar = out + ".json";
  cc::write_file(out, cc::edge_list_to_text(gadget.n_vertices, gadget.slots));
  cc::write_file(sidecar, ordered_json{{"reduction", "nae3sat-to-maxcut"},
                                       {"n_vars", gadget.n_vars},
                                       {"n_clauses", gadget.n_clauses},
                                       {"n_vertices", gadget.n_vertices},
                                       {"n_slots", gadget.slot_count()},
                                       {"t", gadget.t},
                                       {"parallel_free", gadget.parallel_free},
                                       {"clauses", clauses_json(f)},
                                       {"clause_families", families_json(gadget.clause_families)},
                                       {"variable_families", families_json(gadget.variable_families)}}
                              .dump(2) +
                              "\n");
  emit_reduce_summary("nae3sat-to-maxcut", out, sidecar,
                      ordered_json{{"n_vertices", gadget.n_vertices},
                                   {"n_slots", gadget.slot_count()},
                                   {"t", gadget.t}});
}

struct VerifyFlags {
  std::string input;
  std::string sidecar;
  std::string output;
  bool exhaustive = false;
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  int p = 1;
};

// deterministic nonempty-both-sides bipartitions for sampling verifiers
std::vector<int> random_bipartition(int n, std::mt19937_64& rng, bool require_nonempty) {
  std::vector<int> side(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    for (auto& s : side) s = coin(rng);
    if (!require_nonempty) return side;
    const auto ones = std::count(side.begin(), side.end(), 1);
    if (ones != 0 && ones != n) return side;
  }
}

int emit_verify(const ordered_json& doc, const std::string& output, std::int64_t failures) {
  emit(doc.dump(2), output);
  return failures == 0 ? 0 : 1;
}

int run_verify_claim31(const VerifyFlags& flags) {
  const cc::Graph g = cc::load_graph(flags.input);
  const cc::EmbeddedInstance embedded = cc::maxcut_to_2means(g, 0);
  const int n = g.n_vertices();
  std::int64_t checked = 0, failures = 0;
  auto check = [&](const std::vector<int>& side) {
    ++checked;
    const cc::Rational expect = cc::predicted_2means_cost(g, side);
    const cc::Rational got = cc::kmeans_cost(embedded.points, cc::Clustering{2, side});
    if (expect != got) ++failures;
  };
  if (flags.exhaustive) {
    const cc::OracleCaps caps = oracle_caps_from_env();
    if (n > caps.cut_n) throw cc::CapError("graph too large for exhaustive bipartition sweep");
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = static_cast<int>(bits >> (v - 1) & 1);
      check(side);
    }
  } else {
    std::mt19937_64 rng(flags.seed);
    for (std::int64_t i = 0; i < flags.samples; ++i) check(random_bipartition(n, rng, true));
  }
  return emit_verify(ordered_json{{"verifier", "claim31"},
                                  {"mode", flags.exhaustive ? "exhaustive" : "samples"},
                                  {"checked", checked},
                                  {"failures", failures},
                                  {"all_pass", failures == 0}},
                     flags.output, failures);
}

int run_verify_claim62(const VerifyFlags& flags) {
  const cc::Graph g = cc::load_graph(flags.input);
  const cc::EmbeddedInstance embedded = cc::maxcut_to_2minsum(g, 0, flags.p);
  const int n = g.n_vertices();
  std::int64_t checked = 0, failures = 0;
  auto check = [&](const std::vector<int>& side) {
    ++checked;
    const cc::SymbolicSum expect = cc::predicted_2minsum_cost(g, side, flags.p);
    const cc::SymbolicSum got = cc::minsum_cost(embedded.points, cc::Clustering{2, side}, flags.p);
    if (expect != got) ++failures;
  };
  if (flags.exhaustive) {
    const cc::OracleCaps caps = oracle_caps_from_env();
    if (n > caps.cut_n) throw cc::CapError("graph too large for exhaustive bipartition sweep");
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = static_cast<int>(bits >> (v - 1) & 1);
      check(side);
    }
  } else {
    std::mt19937_64 rng(flags.seed);
    for (std::int64_t i = 0; i < flags.samples; ++i) check(random_bipartition(n, rng, true));
  }
  return emit_verify(ordered_json{{"verifier", "claim62"},
                                  {"p", flags.p},
                                  {"mode", flags.exhaustive ? "exhaustive" : "samples"},
                                  {"checked", checked},
                                  {"failures", failures},
                                  {"all_pass", failures == 0}},
                     flags.output, failures);
}

int run_verify_lemma_a1(const VerifyFlags& flags) {
  // rebuild the gadget from the sidecar CNF, then cross-check the graph file
  const std::string sidecar_text = cc::read_file(flags.sidecar);
  ordered_json side_doc;
  try {
    side_doc = ordered_json::parse(sidecar_text);
  } catch (const nlohmann::json::exception& e) {
    throw cc::ParseError(flags.sidecar, 0, e.what());
  }
  if (!side_doc.contains("clauses") || !side_doc.contains("n_vars"))
    throw cc::ParseError(flags.sidecar, 0, "sidecar lacks n_vars/clauses");
  std::vector<cc::Clause> clauses;
  for (const auto& lits : side_doc["clauses"]) {
    cc::Clause c;
    for (const auto& l : lits) {
      const int signed_lit = l.get<int>();
      if (signed_lit == 0) throw cc::ParseError(flags.sidecar, 0, "literal 0 in sidecar clause");
      c.push_back(cc::Literal{std::abs(signed_lit) - 1, signed_lit > 0 ? 0 : 1});
    }
    clauses.push_back(std::move(c));
  }
  const cc::Cnf f(side_doc["n_vars"].get<int>(), std::move(clauses));
  const cc::GadgetGraph gadget = cc::nae3sat_to_maxcut(f);

  const cc::RawEdgeList file_edges = cc::parse_edge_list_text(cc::read_file(flags.input), flags.input);
  auto sorted_multiset = [](std::vector<cc::Edge> edges) {
    for (cc::Edge& e : edges)
      if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  const bool edges_match = file_edges.n == gadget.n_vertices &&
                           sorted_multiset(file_edges.edges) == sorted_multiset(gadget.slots);
  if (!edges_match)
    throw cc::PreconditionError("gadget graph file does not match the sidecar formula");

  const int n = gadget.n_vertices;
  std::int64_t checked = 0, failures = 0, balanced_equalities = 0;
  auto check = [&](const std::vector<int>& side) {
    ++checked;
    const cc::BadEdgeBoundReport rep = cc::verify_badedge_bound(gadget, side);
    if (!rep.holds) ++failures;
    if (rep.balanced && rep.equality) {
      ++balanced_equalities;
      if (!rep.families_at_equality) ++failures;
    }
  };
  if (flags.exhaustive) {
    const cc::OracleCaps caps = oracle_caps_from_env();
    if (n > caps.cut_n) throw cc::CapError("gadget too large for exhaustive cut sweep");
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = static_cast<int>(bits >> (v - 1) & 1);
      check(side);
    }
  } else {
    std::mt19937_64 rng(flags.seed);
    for (std::int64_t i = 0; i < flags.samples; ++i) check(random_bipartition(n, rng, false));
  }
  return emit_verify(ordered_json{{"verifier", "lemmaA1"},
                                  {"mode", flags.exhaustive ? "exhaustive" : "samples"},
                                  {"edge_multiset_matches", edges_match},
                                  {"t", gadget.t},
                                  {"checked", checked},
                                  {"balanced_equalities", balanced_equalities},
                                  {"failures", failures},
                                  {"all_pass", failures == 0}},
                     flags.output, failures);
}

int run_verify_conservation(const VerifyFlags& flags) {
  const cc::PointSet pts = cc::load_points(flags.input);
  const int n = pts.n();
  if (n < 2) throw cc::PreconditionError("conservation check needs at least two points");
  cc::SymbolicSum total(flags.p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) total.add_root(pts.lp_pow_dist(i, j, flags.p), 1);

  std::int64_t checked = 0, failures = 0;
  auto check = [&](const std::vector<int>& side) {
    ++checked;
    cc::SymbolicSum crossing(flags.p);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (side[static_cast<std::size_t>(i)] != side[static_cast<std::size_t>(j)])
          crossing.add_root(pts.lp_pow_dist(i, j, flags.p), 1);
    const cc::SymbolicSum within = cc::minsum_cost(pts, cc::Clustering{2, side}, flags.p);
    if (within + crossing != total) ++failures;
  };
  if (flags.exhaustive) {
    const cc::OracleCaps caps = oracle_caps_from_env();
    if (n > caps.cut_n) throw cc::CapError("too many points for exhaustive bipartition sweep");
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = static_cast<int>(bits >> (v - 1) & 1);
      check(side);
    }
  } else {
    std::mt19937_64 rng(flags.seed);
    for (std::int64_t i = 0; i < flags.samples; ++i) check(random_bipartition(n, rng, true));
  }
  return emit_verify(ordered_json{{"verifier", "conservation"},
                                  {"p", flags.p},
                                  {"mode", flags.exhaustive ? "exhaustive" : "samples"},
                                  {"checked", checked},
                                  {"failures", failures},
                                  {"all_pass", failures == 0}},
                     flags.output, failures);
}

struct GenFlags {
  std::string output;
  std::uint64_t seed = 0;
  int n = 8;
  int d = 3;
  int degree = 3;
  int vars = 6;
  std::int64_t coord_max = 3;
};

struct BenchFlags {
  std::vector<int> sizes{6, 9, 12};
  std::vector<int> mm_sizes{64, 128, 256};
  int d = 3;
  std::uint64_t seed = 1;
  std::string kernel = "bitpacked";
  std::string solve_out = "solve_sweep.csv";
  std::string kernel_out = "kernel_sweep.csv";
};

int run_bench(const BenchFlags& flags) {
  const auto solve_rows =
      cc::run_solve_sweep(flags.sizes, flags.d, flags.seed, cc::kernel_from_name(flags.kernel));
  const auto kernel_rows = cc::run_kernel_sweep(flags.mm_sizes, flags.seed);
  cc::write_file(flags.solve_out, cc::solve_sweep_csv(solve_rows));
  cc::write_file(flags.kernel_out, cc::kernel_sweep_csv(kernel_rows));

  bool all_match = true;
  bool domains_bounded = true;
  for (const auto& row : solve_rows) {
    all_match = all_match && row.matches_oracle;
    domains_bounded = domains_bounded && row.sum_domain_sizes <= row.domain_cap;
  }
  ordered_json doc{{"solve_csv", flags.solve_out},
                   {"kernel_csv", flags.kernel_out},
                   {"solve_rows", solve_rows.size()},
                   {"kernel_rows", kernel_rows.size()},
                   {"all_match_oracle", all_match},
                   {"domains_within_bound", domains_bounded},
                   {"fitted_exponent_naive", cc::fitted_exponent(kernel_rows, cc::MatmulKernel::kNaive)},
                   {"fitted_exponent_strassen",
                    cc::fitted_exponent(kernel_rows, cc::MatmulKernel::kStrassen)}};
  std::cout << doc.dump(2) << '\n';
  return all_match && domains_bounded ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 2-means, 2-min-sum and max-cut toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- solve ----
  CLI::App* solve = app.add_subcommand("solve", "run an exact solver or brute-force oracle");
  solve->require_subcommand(1);

  SolveFlags s2means;
  CLI::App* c2means = solve->add_subcommand("2means", "exact Euclidean 2-means");
  add_solver_flags(c2means, s2means, "csp", {"csp", "brute"});
  c2means->callback([&] { run_solve_2means(s2means); });

  SolveFlags s2minsum;
  int minsum_p = 1;
  CLI::App* c2minsum = solve->add_subcommand("2minsum", "exact 2-min-sum in l_p");
  add_solver_flags(c2minsum, s2minsum, "maxcut", {"maxcut", "brute"});
  c2minsum->add_option("--p", minsum_p, "metric exponent")->check(CLI::Range(1, 8));
  c2minsum->callback([&] { run_solve_2minsum(s2minsum, minsum_p); });

  SolveFlags smaxcut;
  CLI::App* cmaxcut = solve->add_subcommand("maxcut", "exact max-cut");
  add_solver_flags(cmaxcut, smaxcut, "fast", {"fast", "brute"});
  cmaxcut->callback([&] { run_solve_maxcut(smaxcut); });

  SolveFlags skmeans;
  int kmeans_k = 2;
  CLI::App* ckmeans = solve->add_subcommand("kmeans", "brute-force k-means");
  ckmeans->add_option("input", skmeans.input, "points file")->required();
  ckmeans->add_option("-o,--output", skmeans.output, "write the JSON report here");
  ckmeans->add_option("--k", kmeans_k, "number of clusters")->check(CLI::Range(1, 16));
  ckmeans->callback([&] { run_solve_kmeans(skmeans, kmeans_k); });

  std::string sbal_input, sbal_output;
  std::int64_t sbal_t = 0;
  CLI::App* cbal = solve->add_subcommand("balanced-maxcut", "balanced max-cut promise oracle");
  cbal->add_option("input", sbal_input, "graph file")->required();
  cbal->add_option("--t", sbal_t, "bad-edge target")->required();
  cbal->add_option("-o,--output", sbal_output, "write the JSON answer here");
  cbal->callback([&] { run_solve_balanced_maxcut(sbal_input, sbal_t, sbal_output); });

  std::string scol_input, scol_output;
  int scol_k = 3;
  CLI::App* ccol = solve->add_subcommand("coloring", "proper k-coloring oracle");
  ccol->add_option("input", scol_input, "graph file")->required();
  ccol->add_option("--k", scol_k, "number of colors")->required()->check(CLI::Range(1, 16));
  ccol->add_option("-o,--output", scol_output, "write the JSON answer here");
  ccol->callback([&] { run_solve_coloring(scol_input, scol_k, scol_output); });

  std::string snae_input, snae_output;
  CLI::App* cnae = solve->add_subcommand("nae", "not-all-equal satisfiability oracle");
  cnae->add_option("input", snae_input, "CNF file")->required();
  cnae->add_option("-o,--output", snae_output, "write the JSON answer here");
  cnae->callback([&] { run_solve_nae(snae_input, snae_output); });

  // ---- csp ----
  CLI::App* csp = app.add_subcommand("csp", "three-variable weighted 2-CSP");
  csp->require_subcommand(1);
  std::string csp_input, csp_output, csp_algo = "mm", csp_kernel = "bitpacked";
  CLI::App* csp_solve = csp->add_subcommand("solve", "exact-target satisfiability");
  csp_solve->add_option("input", csp_input, "JSON instance")->required();
  csp_solve->add_option("-o,--output", csp_output, "write the JSON answer here");
  csp_solve->add_option("--algo", csp_algo, "mm (triangle detection) or naive")
      ->check(CLI::IsMember({"mm", "naive"}));
  csp_solve->add_option("--kernel", csp_kernel, "matrix kernel")
      ->check(CLI::IsMember({"naive", "strassen", "bitpacked"}));
  csp_solve->callback([&] { run_csp_solve(csp_input, csp_algo, csp_kernel, csp_output); });

  // ---- reduce ----
  CLI::App* reduce = app.add_subcommand("reduce", "build a hardness-reduction instance + sidecar");
  reduce->require_subcommand(1);

  auto add_reduce = [&](const char* name, const char* help) {
    CLI::App* cmd = reduce->add_subcommand(name, help);
    auto flags = std::make_shared<ReduceFlags>();
    cmd->add_option("input", flags->input, "input file")->required();
    cmd->add_option("-o,--output", flags->output, "instance output path (sidecar at path + .json)");
    return std::pair{cmd, flags};
  };

  auto [r2means, r2means_flags] =
      add_reduce("maxcut-to-2means", "balanced max-cut instance to 2-means points");
  r2means->add_option("--t", r2means_flags->t, "bad-edge target")->required();
  r2means->add_option("--orientation", r2means_flags->orientation, "edge orientation")
      ->check(CLI::IsMember({"low-high", "random"}));
  r2means->add_option("--seed", r2means_flags->seed, "seed for random orientation");
  r2means->callback([&, flags = r2means_flags] { run_reduce_embedding("maxcut-to-2means", *flags); });

  auto [rcolor, rcolor_flags] = add_reduce("coloring-to-kmeans", "k-coloring instance to k-means points");
  rcolor->add_option("--k", rcolor_flags->k, "number of colors / clusters")->required();
  rcolor->add_option("--orientation", rcolor_flags->orientation, "edge orientation")
      ->check(CLI::IsMember({"low-high", "random"}));
  rcolor->add_option("--seed", rcolor_flags->seed, "seed for random orientation");
  rcolor->callback([&, flags = rcolor_flags] { run_reduce_embedding("coloring-to-kmeans", *flags); });

  auto [r2minsum, r2minsum_flags] =
      add_reduce("maxcut-to-2minsum", "balanced max-cut instance to 2-min-sum points");
  r2minsum->add_option("--t", r2minsum_flags->t, "bad-edge target")->required();
  r2minsum->add_option("--p", r2minsum_flags->p, "metric exponent")->check(CLI::Range(1, 8));
  r2minsum->add_option("--orientation", r2minsum_flags->orientation, "edge orientation")
      ->check(CLI::IsMember({"low-high", "random"}));
  r2minsum->add_option("--seed", r2minsum_flags->seed, "seed for random orientation");
  r2minsum->callback(
      [&, flags = r2minsum_flags] { run_reduce_embedding("maxcut-to-2minsum", *flags); });

  auto [rminsum, rminsum_flags] = add_reduce("minsum-to-maxcut", "2-min-sum points to max-cut graph");
  rminsum->add_option("--p", rminsum_flags->p, "metric exponent")->check(CLI::Range(1, 8));
  rminsum->callback([&, flags = rminsum_flags] { run_reduce_minsum_to_maxcut(*flags); });

  auto [rnae, rnae_flags] = add_reduce("nae3sat-to-maxcut", "NAE-3-SAT formula to cut gadget");
  rnae->callback([&, flags = rnae_flags] { run_reduce_nae3sat(*flags); });

  // ---- verify ----
  CLI::App* verify = app.add_subcommand("verify", "check predicted costs and bounds");
  verify->require_subcommand(1);

  auto add_verify = [&](const char* name, const char* help, bool with_p, bool with_sidecar) {
    CLI::App* cmd = verify->add_subcommand(name, help);
    auto flags = std::make_shared<VerifyFlags>();
    cmd->add_option("input", flags->input, "input file")->required();
    if (with_sidecar) cmd->add_option("sidecar", flags->sidecar, "gadget sidecar JSON")->required();
    cmd->add_option("-o,--output", flags->output, "write the JSON report here");
    cmd->add_flag("--exhaustive", flags->exhaustive, "sweep every bipartition");
    cmd->add_option("--samples", flags->samples, "number of sampled bipartitions")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", flags->seed, "sampling seed");
    if (with_p) cmd->add_option("--p", flags->p, "metric exponent")->check(CLI::Range(1, 8));
    return std::pair{cmd, flags};
  };

  auto [v31, v31_flags] = add_verify("claim31", "2-means embedding cost identity", false, false);
  v31->callback([&, flags = v31_flags] { exit_code = run_verify_claim31(*flags); });
  auto [v62, v62_flags] = add_verify("claim62", "2-min-sum embedding cost identity", true, false);
  v62->callback([&, flags = v62_flags] { exit_code = run_verify_claim62(*flags); });
  auto [va1, va1_flags] = add_verify("lemmaA1", "gadget bad-edge lower bound", false, true);
  va1->callback([&, flags = va1_flags] { exit_code = run_verify_lemma_a1(*flags); });
  auto [vcons, vcons_flags] = add_verify("conservation", "min-sum + cut = total", true, false);
  vcons->callback([&, flags = vcons_flags] { exit_code = run_verify_conservation(*flags); });

  // ---- gen ----
  CLI::App* gen = app.add_subcommand("gen", "seeded instance generators");
  gen->require_subcommand(1);

  GenFlags gpoints;
  CLI::App* gen_points = gen->add_subcommand("points", "uniform random integer points");
  gen_points->add_option("--n", gpoints.n, "number of points")->required();
  gen_points->add_option("--d", gpoints.d, "dimension")->required();
  gen_points->add_option("--coord-max", gpoints.coord_max, "coordinate bound");
  gen_points->add_option("--seed", gpoints.seed, "generator seed")->required();
  gen_points->add_option("-o,--output", gpoints.output, "output file (stdout otherwise)");
  gen_points->callback([&] {
    emit(cc::points_to_text(cc::random_points(gpoints.n, gpoints.d, gpoints.coord_max, gpoints.seed)),
         gpoints.output);
  });

  GenFlags gregular;
  CLI::App* gen_regular = gen->add_subcommand("regular", "random simple d-regular graph");
  gen_regular->add_option("--n", gregular.n, "number of vertices")->required();
  gen_regular->add_option("--degree", gregular.degree, "vertex degree")->required();
  gen_regular->add_option("--seed", gregular.seed, "generator seed")->required();
  gen_regular->add_option("-o,--output", gregular.output, "output file (stdout otherwise)");
  gen_regular->callback([&] {
    emit(cc::graph_to_text(cc::random_regular_graph(gregular.n, gregular.degree, gregular.seed)),
         gregular.output);
  });

  GenFlags gcnf;
  CLI::App* gen_cnf = gen->add_subcommand("cnf", "random linear 4-regular 3-uniform CNF");
  gen_cnf->add_option("--vars", gcnf.vars, "number of variables (multiple of 3)")->required();
  gen_cnf->add_option("--seed", gcnf.seed, "generator seed")->required();
  gen_cnf->add_option("-o,--output", gcnf.output, "output file (stdout otherwise)");
  gen_cnf->callback(
      [&] { emit(cc::cnf_to_text(cc::random_linear_4regular_cnf(gcnf.vars, gcnf.seed)), gcnf.output); });

  // ---- bench ----
  BenchFlags bench;
  CLI::App* cbench = app.add_subcommand("bench", "solver and kernel sweeps, CSV output");
  cbench->add_option("--sizes", bench.sizes, "2-means sweep sizes");
  cbench->add_option("--d", bench.d, "sweep dimension");
  cbench->add_option("--seed", bench.seed, "sweep seed");
  cbench->add_option("--kernel", bench.kernel, "matrix kernel for the solver sweep")
      ->check(CLI::IsMember({"naive", "strassen", "bitpacked"}));
  cbench->add_option("--mm-sizes", bench.mm_sizes, "kernel sweep matrix sizes");
  cbench->add_option("--solve-out", bench.solve_out, "solver sweep CSV path");
  cbench->add_option("--kernel-out", bench.kernel_out, "kernel sweep CSV path");
  cbench->callback([&] { exit_code = run_bench(bench); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const cc::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const cc::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
