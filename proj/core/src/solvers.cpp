#include "clustercut/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "clustercut/clustering.hpp"
#include "clustercut/costs.hpp"
#include "clustercut/reductions.hpp"

namespace clustercut {

namespace {

std::array<int, 3> consecutive_group_sizes(int n) {
  const int g0 = (n + 2) / 3;
  const int g1 = (n - g0 + 1) / 2;
  return {g0, g1, n - g0 - g1};
}

// per-group subset sums of squared distances, shared across all signatures
struct SplitTables {
  std::array<std::vector<int>, 3> members;          // global point ids
  std::array<std::vector<std::int64_t>, 3> within;  // [g][mask]: pair sum inside mask
  // [p][mask_i * 2^{s_j} + mask_j]: sum over pairs (u in mask_i, v in mask_j)
  std::array<std::vector<std::int64_t>, 3> cross;
  std::array<std::vector<std::vector<std::uint32_t>>, 3> masks_by_count;
};

SplitTables build_split_tables(const PointSet& pts, std::array<std::vector<int>, 3> members,
                               std::size_t max_table_entries) {
  SplitTables t;
  t.members = std::move(members);
  for (int g = 0; g < 3; ++g) {
    const auto& mem = t.members[g];
    const int s = static_cast<int>(mem.size());
    if (s >= 31 || (std::size_t{1} << s) > max_table_entries)
      throw CapError("split tables exceed the configured entry guard");
    t.within[g].assign(std::size_t{1} << s, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s); ++mask) {
      const int low = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      std::int64_t sum = t.within[g][rest];
      for (std::uint32_t r = rest; r != 0; r &= r - 1)
        sum += pts.sq_dist(mem[low], mem[std::countr_zero(r)]);
      t.within[g][mask] = sum;
    }
    t.masks_by_count[g].assign(static_cast<std::size_t>(s) + 1, {});
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask)
      t.masks_by_count[g][static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }
  for (int p = 0; p < 3; ++p) {
    const auto& mi = t.members[kCspPairs[p][0]];
    const auto& mj = t.members[kCspPairs[p][1]];
    const int si = static_cast<int>(mi.size()), sj = static_cast<int>(mj.size());
    if ((std::size_t{1} << (si + sj)) > max_table_entries)
      throw CapError("split tables exceed the configured entry guard");
    const std::size_t wj = std::size_t{1} << sj;
    // rowsum[u][mask_j] via subset recurrence, then peel the low bit of mask_i
    std::vector<std::int64_t> rowsum(static_cast<std::size_t>(si) * wj, 0);
    for (int u = 0; u < si; ++u)
      for (std::uint32_t m = 1; m < wj; ++m)
        rowsum[u * wj + m] =
            rowsum[u * wj + (m & (m - 1))] + pts.sq_dist(mi[u], mj[std::countr_zero(m)]);
    auto& cr = t.cross[p];
    cr.assign((std::size_t{1} << si) * wj, 0);
    for (std::uint32_t a = 1; a < (std::uint32_t{1} << si); ++a) {
      const int low = std::countr_zero(a);
      const std::size_t base = static_cast<std::size_t>(a) * wj;
      const std::size_t rest = static_cast<std::size_t>(a & (a - 1)) * wj;
      for (std::uint32_t b = 0; b < wj; ++b) cr[base + b] = cr[rest + b] + rowsum[low * wj + b];
    }
  }
  return t;
}

void check_weight_guard(const PointSet& pts, std::int64_t cap) {
  const unsigned __int128 m = static_cast<unsigned __int128>(pts.max_abs_coord());
  const unsigned __int128 n = static_cast<unsigned __int128>(pts.n());
  const unsigned __int128 bound = 8 * m * m * n * n * n * static_cast<unsigned __int128>(pts.d());
  if (bound > static_cast<unsigned __int128>(cap))
    throw CapError("total split weight may exceed the weight cap for these coordinates");
}

struct SignatureInstance {
  Csp2Instance instance;
  std::array<const std::vector<std::uint32_t>*, 3> domains{};
};

SignatureInstance instance_for_signature(const SplitTables& t, const std::array<int, 3>& a,
                                         std::int64_t weight_cap) {
  int sa = 0, sb = 0;
  std::array<std::uint32_t, 3> full{};
  for (int g = 0; g < 3; ++g) {
    const int s = static_cast<int>(t.members[g].size());
    sa += a[g];
    sb += s - a[g];
    full[g] = (std::uint32_t{1} << s) - 1;
  }
  SignatureInstance out;
  out.instance.weight_cap = weight_cap;
  for (int g = 0; g < 3; ++g) {
    const auto& dom = t.masks_by_count[g][static_cast<std::size_t>(a[g])];
    out.domains[g] = &dom;
    auto& vw = out.instance.vertex_weights[g];
    vw.reserve(dom.size());
    for (std::uint32_t mask : dom)
      vw.push_back(sb * t.within[g][mask] + sa * t.within[g][full[g] ^ mask]);
  }
  for (int p = 0; p < 3; ++p) {
    const int i = kCspPairs[p][0], j = kCspPairs[p][1];
    const auto& di = *out.domains[i];
    const auto& dj = *out.domains[j];
    const std::size_t wj = std::size_t{1} << t.members[j].size();
    auto& pw = out.instance.pair_weights[p];
    pw.reserve(di.size() * dj.size());
    for (std::uint32_t mi : di)
      for (std::uint32_t mj : dj)
        pw.push_back(sb * t.cross[p][mi * wj + mj] +
                     sa * t.cross[p][(full[i] ^ mi) * wj + (full[j] ^ mj)]);
  }
  return out;
}

std::vector<std::int64_t> sumset(const std::vector<std::int64_t>& a,
                                 const std::vector<std::int64_t>& b,
                                 std::size_t max_entries) {
  if (b.empty()) return a;
  if (a.size() * b.size() > max_entries)
    throw CapError("achievable-target sumset exceeds the configured entry guard");
  std::vector<std::int64_t> out;
  out.reserve(a.size() * b.size());
  for (std::int64_t x : a)
    for (std::int64_t y : b) out.push_back(x + y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> sumset3(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b,
                                  const std::vector<std::int64_t>& c,
                                  std::size_t max_entries) {
  return sumset(sumset(a, b, max_entries), c, max_entries);
}

enum class WalkAction { kContinue, kStop };

// visits (vs[i], es[j]) pairs by ascending sum, ties on smaller vs value first
template <class Visit>
void walk_pairs_ascending(const std::vector<std::int64_t>& vs,
                          const std::vector<std::int64_t>& es, Visit visit) {
  if (vs.empty() || es.empty()) return;
  struct Node {
    std::int64_t total, kv;
    std::size_t i, j;
  };
  auto later = [](const Node& a, const Node& b) {
    return std::tie(a.total, a.kv) > std::tie(b.total, b.kv);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> heap(later);
  heap.push({vs[0] + es[0], vs[0], 0, 0});
  while (!heap.empty()) {
    const Node nd = heap.top();
    heap.pop();
    if (visit(vs[nd.i], es[nd.j]) == WalkAction::kStop) return;
    if (nd.j == 0 && nd.i + 1 < vs.size()) heap.push({vs[nd.i + 1] + es[0], vs[nd.i + 1], nd.i + 1, 0});
    if (nd.j + 1 < es.size()) heap.push({vs[nd.i] + es[nd.j + 1], vs[nd.i], nd.i, nd.j + 1});
  }
}

// descending-sum mirror of walk_pairs_ascending
template <class Visit>
void walk_pairs_descending(const std::vector<std::int64_t>& vs,
                           const std::vector<std::int64_t>& es, Visit visit) {
  if (vs.empty() || es.empty()) return;
  struct Node {
    std::int64_t total, kv;
    std::size_t i, j;
  };
  auto later = [](const Node& a, const Node& b) {
    return std::tie(a.total, a.kv) < std::tie(b.total, b.kv);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> heap(later);
  const std::size_t li = vs.size() - 1, lj = es.size() - 1;
  heap.push({vs[li] + es[lj], vs[li], li, lj});
  while (!heap.empty()) {
    const Node nd = heap.top();
    heap.pop();
    if (visit(vs[nd.i], es[nd.j]) == WalkAction::kStop) return;
    if (nd.j == lj && nd.i > 0) heap.push({vs[nd.i - 1] + es[lj], vs[nd.i - 1], nd.i - 1, lj});
    if (nd.j > 0) heap.push({vs[nd.i] + es[nd.j - 1], vs[nd.i], nd.i, nd.j - 1});
  }
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void SplitSpec::validate() const {
  const int n = static_cast<int>(group.size());
  if (n < 2) throw PreconditionError("split needs at least two points");
  std::array<int, 3> sizes{};
  for (int g : group) {
    if (g < 0 || g > 2) throw PreconditionError("split group label out of range");
    ++sizes[static_cast<std::size_t>(g)];
  }
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  if (*hi - *lo > 1) throw PreconditionError("split group sizes must differ by at most one");
  int sa = 0, sb = 0;
  for (int g = 0; g < 3; ++g) {
    if (a[g] < 0 || b[g] < 0 || a[g] + b[g] != sizes[g])
      throw PreconditionError("split size signature does not match its group sizes");
    sa += a[g];
    sb += b[g];
  }
  if (sa == 0 || sb == 0) throw PreconditionError("split must leave both clusters nonempty");
}

Csp2Instance build_csp_for_split(const PointSet& points, const SplitSpec& split,
                                 std::int64_t kv_target, std::int64_t ke_target,
                                 const SolverConfig& config) {
  if (static_cast<int>(split.group.size()) != points.n())
    throw PreconditionError("split size does not match the point set");
  split.validate();
  check_weight_guard(points, config.weight_cap);
  std::array<std::vector<int>, 3> members;
  for (int i = 0; i < points.n(); ++i) members[static_cast<std::size_t>(split.group[i])].push_back(i);
  const SplitTables tables = build_split_tables(points, std::move(members), config.max_table_entries);
  SignatureInstance si = instance_for_signature(tables, split.a, config.weight_cap);
  si.instance.kv_target = kv_target;
  si.instance.ke_target = ke_target;
  si.instance.validate();
  return std::move(si.instance);
}

SolveReport solve_2means_exact(const PointSet& points, const SolverConfig& config) {
  const int n = points.n();
  if (n < 2) throw PreconditionError("2-means needs at least two points");
  check_weight_guard(points, config.weight_cap);

  const std::array<int, 3> sizes = consecutive_group_sizes(n);
  std::array<std::vector<int>, 3> members;
  std::vector<int> group_of(static_cast<std::size_t>(n));
  for (int i = 0, g = 0, taken = 0; i < n; ++i) {
    if (taken == sizes[static_cast<std::size_t>(g)]) {
      ++g;
      taken = 0;
    }
    members[static_cast<std::size_t>(g)].push_back(i);
    group_of[static_cast<std::size_t>(i)] = g;
    ++taken;
  }
  const SplitTables tables = build_split_tables(points, members, config.max_table_entries);

  // size signatures, complement-symmetric halves pruned, small domains first
  struct Sig {
    std::array<int, 3> a;
    std::int64_t dprod;
  };
  std::vector<Sig> sigs;
  for (int a0 = 0; a0 <= sizes[0]; ++a0)
    for (int a1 = 0; a1 <= sizes[1]; ++a1)
      for (int a2 = 0; a2 <= sizes[2]; ++a2) {
        const std::array<int, 3> a{a0, a1, a2};
        const std::array<int, 3> b{sizes[0] - a0, sizes[1] - a1, sizes[2] - a2};
        const int sa = a0 + a1 + a2;
        if (sa == 0 || sa == n) continue;
        if (a > b) continue;  // the complement signature yields the same clusterings
        sigs.push_back({a, binom(sizes[0], a0) * binom(sizes[1], a1) * binom(sizes[2], a2)});
      }
  std::sort(sigs.begin(), sigs.end(),
            [](const Sig& x, const Sig& y) { return std::tie(x.dprod, x.a) < std::tie(y.dprod, y.a); });

  std::mutex best_mu;
  std::optional<CandidateSolution> best;
  std::size_t best_sig = 0;
  std::atomic<std::int64_t> queries{0}, yes_queries{0}, skipped{0};

  // true when (t / denom, sig_idx) cannot beat the best found so far
  auto clipped = [&](std::int64_t t, std::int64_t denom, std::size_t sig_idx) {
    std::lock_guard lk(best_mu);
    if (!best) return false;
    const Rational cand = make_rational(t, denom);
    return cand > best->ratio || (cand == best->ratio && sig_idx > best_sig);
  };

  auto process = [&](std::size_t sig_idx) {
    const Sig& sig = sigs[sig_idx];
    std::int64_t sa = 0;
    for (int g = 0; g < 3; ++g) sa += sig.a[static_cast<std::size_t>(g)];
    const std::int64_t denom = sa * (n - sa);

    SignatureInstance si = instance_for_signature(tables, sig.a, config.weight_cap);
    const ExactTargetSolver solver(si.instance, config.kernel, config.counters);

    std::int64_t min_total = 0, max_kv = 0, max_ke = 0;
    for (int v = 0; v < 3; ++v) {
      min_total += solver.vertex_values(v).front();
      max_kv += solver.vertex_values(v).back();
    }
    for (int p = 0; p < 3; ++p) {
      min_total += solver.pair_values(p).front();
      max_ke += solver.pair_values(p).back();
    }
    if (clipped(min_total, denom, sig_idx)) {
      ++skipped;
      return;
    }

    std::int64_t local_queries = 0;
    auto visit = [&](std::int64_t kv, std::int64_t ke) {
      if (clipped(kv + ke, denom, sig_idx)) return WalkAction::kStop;
      ++local_queries;
      const auto witness = solver.solve(kv, ke);
      if (!witness) return WalkAction::kContinue;
      ++yes_queries;
      CandidateSolution cand;
      cand.kv = kv;
      cand.ke = ke;
      cand.split.group = group_of;
      cand.split.a = sig.a;
      for (int g = 0; g < 3; ++g)
        cand.split.b[static_cast<std::size_t>(g)] =
            sizes[static_cast<std::size_t>(g)] - sig.a[static_cast<std::size_t>(g)];
      for (int g = 0; g < 3; ++g)
        cand.first_cluster_masks[static_cast<std::size_t>(g)] =
            (*si.domains[static_cast<std::size_t>(g)])[static_cast<std::size_t>(
                witness->value[static_cast<std::size_t>(g)])];
      cand.ratio = make_rational(kv + ke, denom);
      std::lock_guard lk(best_mu);
      if (!best || cand.ratio < best->ratio || (cand.ratio == best->ratio && sig_idx < best_sig)) {
        best = std::move(cand);
        best_sig = sig_idx;
      }
      return WalkAction::kStop;
    };

    if (config.dense_targets) {
      const unsigned __int128 cells =
          (static_cast<unsigned __int128>(max_kv) + 1) * (static_cast<unsigned __int128>(max_ke) + 1);
      if (cells > static_cast<unsigned __int128>(config.max_table_entries))
        throw CapError("dense target range exceeds the configured entry guard");
      bool stop = false;
      for (std::int64_t t = min_total; t <= max_kv + max_ke && !stop; ++t)
        for (std::int64_t kv = std::max<std::int64_t>(0, t - max_ke);
             kv <= std::min(t, max_kv) && !stop; ++kv)
          stop = visit(kv, t - kv) == WalkAction::kStop;
    } else {
      const auto vs = sumset3(solver.vertex_values(0), solver.vertex_values(1),
                              solver.vertex_values(2), config.max_table_entries);
      const auto es = sumset3(solver.pair_values(0), solver.pair_values(1),
                              solver.pair_values(2), config.max_table_entries);
      walk_pairs_ascending(vs, es, visit);
    }
    if (local_queries == 0) ++skipped;
    queries += local_queries;
  };

  const int n_threads = std::max(1, config.threads);
  if (n_threads == 1 || sigs.size() < 2) {
    for (std::size_t i = 0; i < sigs.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mu;
    const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(n_threads), sigs.size());
    for (std::size_t w = 0; w < want; ++w)
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next.fetch_add(1); i < sigs.size(); i = next.fetch_add(1)) process(i);
        } catch (...) {
          std::lock_guard lk(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  if (!best) throw std::logic_error("2-means sweep finished without a satisfiable target");

  std::vector<int> side(static_cast<std::size_t>(n), 1);
  for (int g = 0; g < 3; ++g) {
    const auto& mem = members[static_cast<std::size_t>(g)];
    const std::uint32_t mask = best->first_cluster_masks[static_cast<std::size_t>(g)];
    for (std::size_t t = 0; t < mem.size(); ++t)
      if (mask >> t & 1u) side[static_cast<std::size_t>(mem[t])] = 0;
  }
  Clustering clu{2, side};
  clu = canonical_labels(clu);
  const Rational cost = kmeans_cost(points, clu);
  if (cost != best->ratio)
    throw std::logic_error("2-means witness cost does not match its target ratio");

  if (config.diagnostics) {
    config.diagnostics->signatures_total = static_cast<std::int64_t>(sigs.size());
    config.diagnostics->signatures_skipped = skipped;
    config.diagnostics->queries = queries;
    config.diagnostics->yes_queries = yes_queries;
    config.diagnostics->domain_size_bound = (std::int64_t{1} << sizes[0]) +
                                            (std::int64_t{1} << sizes[1]) +
                                            (std::int64_t{1} << sizes[2]);
  }

  SolveReport report;
  report.optimum = cost;
  report.witness = clu.assignment;
  report.explored = static_cast<std::uint64_t>(queries);
  return report;
}

SolveReport solve_maxcut_fast(const WeightedGraph& graph, const SolverConfig& config) {
  const int n = graph.n_vertices();
  if (n < 1) throw PreconditionError("max-cut needs at least one vertex");
  if (graph.total_weight() > config.weight_cap)
    throw CapError("total edge weight exceeds the weight cap");

  CspNInstance flat;
  flat.n_vars = n;
  flat.domain_size = 2;
  flat.unary.assign(static_cast<std::size_t>(n), {0, 0});
  for (const WeightedEdge& e : graph.edges())
    flat.pairs.push_back({e.u, e.v, {0, e.w, e.w, 0}});
  const GroupedCsp grouped = group_into_three(flat);

  // complement symmetry: pin vertex 0 (low digit of group 0) to side 0
  Csp2Instance pinned = grouped.instance;
  const int d0 = grouped.instance.domain_size(0);
  const int d1 = grouped.instance.domain_size(1);
  const int d2 = grouped.instance.domain_size(2);
  const int kept = std::max(1, d0 / 2);
  pinned.vertex_weights[0].clear();
  for (int v = 0; v < kept; ++v)
    pinned.vertex_weights[0].push_back(grouped.instance.vertex_weights[0][static_cast<std::size_t>(2 * v) % d0]);
  for (int p : {0, 2}) {
    const int cols = p == 0 ? d1 : d2;
    auto& pw = pinned.pair_weights[static_cast<std::size_t>(p)];
    pw.clear();
    for (int v = 0; v < kept; ++v) {
      const std::size_t row = static_cast<std::size_t>((2 * v) % d0) * cols;
      for (int c = 0; c < cols; ++c)
        pw.push_back(grouped.instance.pair_weights[static_cast<std::size_t>(p)][row + c]);
    }
  }
  pinned.weight_cap = config.weight_cap;
  pinned.validate();

  const ExactTargetSolver solver(pinned, config.kernel, config.counters);
  const auto vs = sumset3(solver.vertex_values(0), solver.vertex_values(1), solver.vertex_values(2),
                          config.max_table_entries);
  const auto es = sumset3(solver.pair_values(0), solver.pair_values(1), solver.pair_values(2),
                          config.max_table_entries);

  std::int64_t queries = 0;
  std::optional<CspAssignment> found;
  std::int64_t found_total = 0;
  walk_pairs_descending(vs, es, [&](std::int64_t kv, std::int64_t ke) {
    ++queries;
    if (auto w = solver.solve(kv, ke)) {
      found = *w;
      found_total = kv + ke;
      return WalkAction::kStop;
    }
    return WalkAction::kContinue;
  });
  if (!found) throw std::logic_error("max-cut sweep finished without a satisfiable total");

  std::array<int, 3> values = found->value;
  values[0] = (2 * values[0]) % std::max(d0, 1);
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  for (int g = 0; g < 3; ++g) {
    const std::vector<int> digits = grouped.decode(g, values[static_cast<std::size_t>(g)]);
    for (std::size_t t = 0; t < digits.size(); ++t)
      side[static_cast<std::size_t>(grouped.groups[static_cast<std::size_t>(g)][t])] = digits[t];
  }
  if (cut_weight(graph, side) != found_total)
    throw std::logic_error("max-cut witness does not match its total");

  SolveReport report;
  report.optimum = Rational(found_total);
  report.witness = std::move(side);
  report.explored = static_cast<std::uint64_t>(queries);
  return report;
}

SolveReport solve_2minsum_exact(const PointSet& points, int p, const SolverConfig& config) {
  const int n = points.n();
  if (n < 2) throw PreconditionError("2-min-sum needs at least two points");
  const MinsumReductionResult red = minsum_to_maxcut(points, p, config.weight_cap);
  const SolveReport mc = solve_maxcut_fast(red.graph, config);

  std::vector<int> side = mc.witness;
  if (std::count(side.begin(), side.end(), side[0]) == n)
    side[static_cast<std::size_t>(n - 1)] = 1 - side[static_cast<std::size_t>(n - 1)];
  const Clustering clu = canonical_labels(Clustering{2, side});

  SolveReport report;
  report.witness = clu.assignment;
  report.explored = mc.explored;
  const SymbolicSum exact_cost = minsum_cost(points, clu, p);
  if (red.exact) {
    const std::int64_t cut = static_cast<std::int64_t>(rat_num(*mc.optimum));
    const Rational value = Rational(red.graph.total_weight() - cut);
    SymbolicSum expect(p);
    expect.add_rational(value);
    if (exact_cost != expect)
      throw std::logic_error("2-min-sum witness cost does not match the cut complement");
    report.optimum = value;
  } else {
    report.optimum_sym = exact_cost;
  }
  return report;
}

}  // namespace clustercut
