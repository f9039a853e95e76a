#include "clustercut/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "clustercut/costs.hpp"

namespace clustercut {

namespace {

using i64 = std::int64_t;
using i128 = __int128;
using u64 = std::uint64_t;

std::vector<std::vector<i64>> metric_table(const PointSet& pts, bool squared, int p) {
  int n = pts.n();
  std::vector<std::vector<i64>> d(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d[i][j] = d[j][i] = squared ? pts.sq_dist(i, j) : pts.lp_pow_dist(i, j, p);
  return d;
}

// visits every bipartition with item 0 pinned to side 0, one flip at a time;
// flip(p) runs before side[p] toggles so the callback sees the old sides
template <class Flip, class Visit>
void gray_sweep(int n, std::vector<int>& side, Flip&& flip, Visit&& visit) {
  if (n < 1) return;
  u64 total = (u64{1} << (n - 1)) - 1;
  for (u64 it = 1; it <= total; ++it) {
    int p = std::countr_zero(it) + 1;
    flip(p);
    side[p] ^= 1;
    visit();
  }
}

// restricted-growth enumeration of surjective assignments onto k clusters,
// lexicographic order; prunes branches that can no longer reach k clusters
void rgs_enumerate(int n, int k, std::vector<int>& a,
                   const std::function<void(const std::vector<int>&)>& at_leaf) {
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (k - 1 - max_used > n - i) return;  // not enough items left
    if (i == n) {
      at_leaf(a);
      return;
    }
    int top = std::min(max_used + 1, k - 1);
    for (int c = 0; c <= top; ++c) {
      a[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  a.assign(n, 0);
  rec(1, 0);  // item 0 pinned to cluster 0
}

struct FracBest {
  i128 num = -1;
  i128 den = 1;
  std::vector<int> witness;

  // true if num/den (den > 0) improves, or ties with a smaller witness
  bool offer(i128 num_, i128 den_, const std::vector<int>& w) {
    if (num < 0 || num_ * den < num * den_) {
      num = num_;
      den = den_;
      witness = w;
      return true;
    }
    if (num_ * den == num * den_ && w < witness) {
      witness = w;
      return true;
    }
    return false;
  }
};

SolveReport kmeans_k1(const PointSet& pts) {
  SolveReport r;
  Clustering c{1, std::vector<int>(pts.n(), 0)};
  r.optimum = kmeans_cost(pts, c);
  r.witness = c.assignment;
  r.explored = 1;
  return r;
}

void check_cluster_count(int n, int k) {
  if (k < 1) throw PreconditionError("need k >= 1");
  if (n < k) throw PreconditionError("fewer items than clusters");
}

void apply_point_cap(int n, int k, const OracleCaps& caps) {
  int cap = k == 2 ? caps.kmeans_two_n : caps.kmeans_k_n;
  if (k >= 2 && n > cap) throw CapError("instance exceeds exhaustive-search cap");
}

}  // namespace

SolveReport brute_kmeans(const PointSet& pts, int k, const OracleCaps& caps) {
  int n = pts.n();
  check_cluster_count(n, k);
  if (k == 1) return kmeans_k1(pts);
  apply_point_cap(n, k, caps);
  auto d = metric_table(pts, true, 2);
  SolveReport r;
  FracBest best;

  if (k == 2) {
    std::vector<int> side(n, 0);
    std::array<i128, 2> s{0, 0};
    std::array<int, 2> sz{n, 0};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s[0] += d[i][j];
    gray_sweep(
        n, side,
        [&](int p) {
          int from = side[p];
          for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            if (side[q] == from)
              s[from] -= d[p][q];
            else
              s[1 - from] += d[p][q];
          }
          --sz[from];
          ++sz[1 - from];
        },
        [&] {
          ++r.explored;
          i128 num = s[0] * sz[1] + s[1] * sz[0];
          i128 den = i128(sz[0]) * sz[1];
          best.offer(num, den, side);
        });
  } else {
    std::vector<int> a;
    rgs_enumerate(n, k, a, [&](const std::vector<int>& asg) {
      ++r.explored;
      std::vector<i128> s(k, 0);
      std::vector<int> sz(k, 0);
      for (int i = 0; i < n; ++i) ++sz[asg[i]];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (asg[i] == asg[j]) s[asg[i]] += d[i][j];
      i128 den = 1;
      for (int c = 0; c < k; ++c) den *= sz[c];
      i128 num = 0;
      for (int c = 0; c < k; ++c) num += s[c] * (den / sz[c]);
      best.offer(num, den, asg);
    });
  }

  r.witness = best.witness;
  r.optimum = kmeans_cost(pts, Clustering{k, best.witness});
  return r;
}

SolveReport brute_minsum(const PointSet& pts, int k, int p, const OracleCaps& caps) {
  int n = pts.n();
  check_cluster_count(n, k);
  if (p < 1) throw PreconditionError("metric exponent must be >= 1");
  SolveReport r;

  if (k == 1) {
    Clustering c{1, std::vector<int>(n, 0)};
    SymbolicSum cost = minsum_cost(pts, c, p);
    if (cost.is_rational()) r.optimum = cost.rational_part();
    r.optimum_sym = cost;
    r.witness = c.assignment;
    r.explored = 1;
    return r;
  }
  apply_point_cap(n, k, caps);

  if (p == 1) {
    // integer metric: exact int arithmetic throughout
    auto d = metric_table(pts, false, 1);
    FracBest best;
    if (k == 2) {
      std::vector<int> side(n, 0);
      i128 within = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) within += d[i][j];
      gray_sweep(
          n, side,
          [&](int pnt) {
            int from = side[pnt];
            for (int q = 0; q < n; ++q) {
              if (q == pnt) continue;
              if (side[q] == from)
                within -= d[pnt][q];
              else
                within += d[pnt][q];
            }
          },
          [&] {
            ++r.explored;
            best.offer(within, 1, side);
          });
    } else {
      std::vector<int> a;
      rgs_enumerate(n, k, a, [&](const std::vector<int>& asg) {
        ++r.explored;
        i128 within = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (asg[i] == asg[j]) within += d[i][j];
        best.offer(within, 1, asg);
      });
    }
    r.witness = best.witness;
    SymbolicSum cost = minsum_cost(pts, Clustering{k, best.witness}, 1);
    r.optimum = cost.rational_part();
    r.optimum_sym = cost;
    return r;
  }

  // p >= 2: rank by double, settle near-ties exactly on the radical form
  auto rad = metric_table(pts, false, p);
  std::vector<std::vector<double>> dd(n, std::vector<double>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dd[i][j] = std::pow(static_cast<double>(rad[i][j]), 1.0 / p);

  auto exact_cost = [&](const std::vector<int>& asg) {
    SymbolicSum s(p);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (asg[i] == asg[j]) s.add_root(rad[i][j], Rational(1));
    return s;
  };

  double best_val = 0;
  bool have_best = false;
  std::vector<int> best_witness;
  auto offer = [&](const std::vector<int>& asg) {
    ++r.explored;
    double cost = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (asg[i] == asg[j]) cost += dd[i][j];
    if (!have_best) {
      have_best = true;
      best_val = cost;
      best_witness = asg;
      return;
    }
    double tol = 1e-9 * (1.0 + std::abs(best_val));
    if (cost < best_val - tol) {
      best_val = cost;
      best_witness = asg;
    } else if (std::abs(cost - best_val) <= tol) {
      if (exact_cost(asg) == exact_cost(best_witness)) {
        if (asg < best_witness) best_witness = asg;
      } else if (cost < best_val) {
        best_val = cost;
        best_witness = asg;
      }
    }
  };

  if (k == 2) {
    std::vector<int> side(n, 0);
    u64 total = (u64{1} << (n - 1)) - 1;
    for (u64 mask = 1; mask <= total; ++mask) {
      for (int i = 1; i < n; ++i) side[i] = static_cast<int>((mask >> (i - 1)) & 1);
      offer(side);
    }
  } else {
    std::vector<int> a;
    rgs_enumerate(n, k, a, offer);
  }

  r.witness = best_witness;
  SymbolicSum cost = exact_cost(best_witness);
  if (cost.is_rational()) r.optimum = cost.rational_part();
  r.optimum_sym = cost;
  return r;
}

SolveReport brute_maxcut(const WeightedGraph& g, const OracleCaps& caps) {
  int n = g.n_vertices();
  if (n < 1) throw PreconditionError("max-cut needs at least one vertex");
  if (n > caps.cut_n) throw CapError("instance exceeds exhaustive-search cap");
  std::vector<std::vector<std::pair<int, i64>>> adj(n);
  for (const WeightedEdge& e : g.edges()) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  SolveReport r;
  std::vector<int> side(n, 0);
  i64 cut = 0;
  i64 best = 0;
  std::vector<int> best_witness = side;
  r.explored = 1;  // the all-one-side start counts
  gray_sweep(
      n, side,
      [&](int v) {
        for (auto [u, w] : adj[v]) cut += side[u] == side[v] ? w : -w;
      },
      [&] {
        ++r.explored;
        if (cut > best || (cut == best && side < best_witness)) {
          best = cut;
          best_witness = side;
        }
      });
  r.optimum = Rational(best);
  r.witness = best_witness;
  return r;
}

std::string promise_answer_name(PromiseAnswer a) {
  switch (a) {
    case PromiseAnswer::kYes: return "yes";
    case PromiseAnswer::kNo: return "no";
    case PromiseAnswer::kNeither: return "neither";
  }
  return "?";
}

PromiseAnswer brute_balanced_maxcut(const Graph& g, i64 t, const OracleCaps& caps) {
  int n = g.n_vertices();
  if (n < 1) throw PreconditionError("balanced max-cut needs at least one vertex");
  if (t < 0) throw PreconditionError("negative target");
  if (n > caps.cut_n) throw CapError("instance exceeds exhaustive-search cap");
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  i64 m = g.m();
  std::vector<int> side(n, 0);
  i64 cut = 0;
  int sz1 = 0;
  bool yes = false;
  bool no = true;
  auto consider = [&] {
    i64 bad = m - cut;
    i64 imb = std::abs(n - 2 * sz1);
    if (imb == 0 && bad == t) yes = true;
    // NO requires n*bad > n*t + t*imb at every bipartition
    if (!(i128(n) * bad > i128(n) * t + i128(t) * imb)) no = false;
  };
  consider();  // all on one side
  gray_sweep(
      n, side,
      [&](int v) {
        for (int u : adj[v]) cut += side[u] == side[v] ? 1 : -1;
        sz1 += side[v] == 0 ? 1 : -1;
      },
      consider);
  if (yes) return PromiseAnswer::kYes;
  if (no) return PromiseAnswer::kNo;
  return PromiseAnswer::kNeither;
}

bool brute_coloring(const Graph& g, int k, const OracleCaps& caps) {
  int n = g.n_vertices();
  if (k < 1) throw PreconditionError("need k >= 1 colors");
  if (n > caps.coloring_n) throw CapError("instance exceeds exhaustive-search cap");
  if (n == 0) return true;
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> rec = [&](int v, int max_used) {
    if (v == n) return true;
    int top = std::min(max_used + 1, k - 1);
    for (int c = 0; c <= top; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (color[u] == c && g.adjacent(u, v)) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (rec(v + 1, std::max(max_used, c))) return true;
      color[v] = -1;
    }
    return false;
  };
  color[0] = 0;
  return rec(1, 0);
}

bool brute_nae_sat(const Cnf& f, const OracleCaps& caps) {
  int n = f.n_vars();
  if (n > caps.nae_vars) throw CapError("instance exceeds exhaustive-search cap");
  for (const Clause& c : f.clauses())
    if (c.empty()) return false;  // an empty clause can never be not-all-equal
  u64 total = n >= 1 ? (u64{1} << (n - 1)) : 1;
  std::vector<int> val(std::max(n, 1), 0);
  for (u64 mask = 0; mask < total; ++mask) {
    for (int i = 1; i < n; ++i) val[i] = static_cast<int>((mask >> (i - 1)) & 1);
    bool ok = true;
    for (const Clause& c : f.clauses()) {
      bool has_true = false, has_false = false;
      for (const Literal& l : c)
        (val[l.var] ^ l.sign ? has_true : has_false) = true;
      if (!has_true || !has_false) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace clustercut
