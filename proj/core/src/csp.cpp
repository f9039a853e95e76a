#include "clustercut/csp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

namespace clustercut {

namespace {

std::int64_t checked_total(unsigned __int128 acc, const char* what) {
  if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    throw CapError(std::string(what) + " exceeds int64");
  return static_cast<std::int64_t>(acc);
}

}  // namespace

std::int64_t Csp2Instance::assignment_vertex_total(const std::array<int, 3>& v) const {
  unsigned __int128 acc = 0;
  for (int i = 0; i < 3; ++i) acc += static_cast<unsigned __int128>(vertex_weights[i][v[i]]);
  return checked_total(acc, "vertex weight total");
}

std::int64_t Csp2Instance::assignment_pair_total(const std::array<int, 3>& v) const {
  unsigned __int128 acc = 0;
  for (int p = 0; p < 3; ++p)
    acc += static_cast<unsigned __int128>(pair_weight(p, v[kCspPairs[p][0]], v[kCspPairs[p][1]]));
  return checked_total(acc, "pair weight total");
}

void Csp2Instance::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (vertex_weights[i].empty()) throw PreconditionError("empty CSP domain");
    for (std::int64_t w : vertex_weights[i]) {
      if (w < 0) throw PreconditionError("negative vertex weight");
      if (w > weight_cap) throw CapError("vertex weight exceeds cap");
    }
  }
  for (int p = 0; p < 3; ++p) {
    std::size_t want = static_cast<std::size_t>(domain_size(kCspPairs[p][0])) *
                       static_cast<std::size_t>(domain_size(kCspPairs[p][1]));
    if (pair_weights[p].size() != want) throw PreconditionError("pair weight table shape mismatch");
    for (std::int64_t w : pair_weights[p]) {
      if (w < 0) throw PreconditionError("negative pair weight");
      if (w > weight_cap) throw CapError("pair weight exceeds cap");
    }
  }
}

struct ExactTargetSolver::Impl {
  const Csp2Instance inst;
  MatmulKernel kernel;
  OpCounters* counters;

  // per variable: attained weights (sorted) and, per attained weight, the
  // packed set of domain values attaining it
  std::array<std::vector<std::int64_t>, 3> vvalues;
  std::array<std::vector<int>, 3> vgroup_of;            // domain index -> value index
  std::array<std::vector<std::vector<std::uint64_t>>, 3> vmasks;  // [value idx] -> bit words

  // per pair: attained weights (sorted) and per-weight 0/1 slice
  std::array<std::vector<std::int64_t>, 3> pvalues;
  std::array<std::vector<BitMatrix>, 3> pslices;
  // compat[p][vi * |Vj| + vj] = sorted pair-value indices attained inside the
  // (vi, vj) block
  std::array<std::vector<std::vector<int>>, 3> compat;

  Impl(const Csp2Instance& instance, MatmulKernel k, OpCounters* c)
      : inst(instance), kernel(k), counters(c) {
    inst.validate();
    for (int var = 0; var < 3; ++var) {
      int dom = inst.domain_size(var);
      std::map<std::int64_t, std::vector<int>> groups;
      for (int a = 0; a < dom; ++a) groups[inst.vertex_weights[var][a]].push_back(a);
      vgroup_of[var].assign(dom, -1);
      int words = (dom + 63) / 64;
      for (auto& [w, members] : groups) {
        int idx = static_cast<int>(vvalues[var].size());
        vvalues[var].push_back(w);
        std::vector<std::uint64_t> mask(words, 0);
        for (int a : members) {
          mask[a >> 6] |= std::uint64_t{1} << (a & 63);
          vgroup_of[var][a] = idx;
        }
        vmasks[var].push_back(std::move(mask));
      }
    }
    for (int p = 0; p < 3; ++p) {
      int vi = kCspPairs[p][0], vj = kCspPairs[p][1];
      int di = inst.domain_size(vi), dj = inst.domain_size(vj);
      std::map<std::int64_t, int> index_of;
      for (int a = 0; a < di; ++a)
        for (int b = 0; b < dj; ++b) index_of.try_emplace(inst.pair_weight(p, a, b), 0);
      int next = 0;
      for (auto& [w, idx] : index_of) {
        idx = next++;
        pvalues[p].push_back(w);
        pslices[p].emplace_back(di, dj);
      }
      compat[p].assign(static_cast<std::size_t>(vvalues[vi].size()) * vvalues[vj].size(), {});
      for (int a = 0; a < di; ++a)
        for (int b = 0; b < dj; ++b) {
          int e = index_of[inst.pair_weight(p, a, b)];
          pslices[p][e].set(a, b, true);
          auto& list = compat[p][static_cast<std::size_t>(vgroup_of[vi][a]) * vvalues[vj].size() +
                                 vgroup_of[vj][b]];
          if (list.empty() || list.back() != e) {
            // keep sorted: inserted in (a,b) scan order, weights arbitrary
            auto it = std::lower_bound(list.begin(), list.end(), e);
            if (it == list.end() || *it != e) list.insert(it, e);
          }
        }
    }
  }

  const std::vector<int>& compat_list(int p, int vi_idx, int vj_idx) const {
    int vj = kCspPairs[p][1];
    return compat[p][static_cast<std::size_t>(vi_idx) * vvalues[vj].size() + vj_idx];
  }

  // slice restricted to rows attaining vertex value ri and columns attaining cj
  BitMatrix masked_slice(int p, int e_idx, int ri, int cj) const {
    int vi = kCspPairs[p][0], vj = kCspPairs[p][1];
    const BitMatrix& full = pslices[p][e_idx];
    BitMatrix out(full.rows(), full.cols());
    const auto& rowmask = vmasks[vi][ri];
    const auto& colmask = vmasks[vj][cj];
    for (int r = 0; r < full.rows(); ++r) {
      if (!((rowmask[r >> 6] >> (r & 63)) & 1u)) continue;
      for (int c = 0; c < full.cols(); ++c)
        if (full.get(r, c) && ((colmask[c >> 6] >> (c & 63)) & 1u)) out.set(r, c, true);
    }
    return out;
  }

  std::optional<CspAssignment> solve(std::int64_t kv, std::int64_t ke) const {
    if (counters) counters->csp_queries.fetch_add(1, std::memory_order_relaxed);
    const auto& v1 = vvalues[0];
    const auto& v2 = vvalues[1];
    const auto& v3 = vvalues[2];
    for (int i1 = 0; i1 < static_cast<int>(v1.size()); ++i1) {
      for (int i2 = 0; i2 < static_cast<int>(v2.size()); ++i2) {
        std::int64_t k3 = kv - v1[i1] - v2[i2];
        auto it3 = std::lower_bound(v3.begin(), v3.end(), k3);
        if (it3 == v3.end() || *it3 != k3) continue;
        int i3 = static_cast<int>(it3 - v3.begin());
        for (int e12 : compat_list(0, i1, i2)) {
          for (int e23 : compat_list(1, i2, i3)) {
            std::int64_t e13 = ke - pvalues[0][e12] - pvalues[1][e23];
            auto it13 = std::lower_bound(pvalues[2].begin(), pvalues[2].end(), e13);
            if (it13 == pvalues[2].end() || *it13 != e13) continue;
            int e13_idx = static_cast<int>(it13 - pvalues[2].begin());
            const auto& c13 = compat_list(2, i1, i3);
            if (!std::binary_search(c13.begin(), c13.end(), e13_idx)) continue;
            if (counters) counters->csp_decompositions.fetch_add(1, std::memory_order_relaxed);
            BitMatrix a12 = masked_slice(0, e12, i1, i2);
            BitMatrix a23 = masked_slice(1, e23, i2, i3);
            BitMatrix a13 = masked_slice(2, e13_idx, i1, i3);
            if (auto tri = triangle_detect(a12, a23, a13, kernel, counters)) {
              CspAssignment asg{{tri->i, tri->j, tri->k}};
              assert(inst.assignment_vertex_total(asg.value) == kv);
              assert(inst.assignment_pair_total(asg.value) == ke);
              return asg;
            }
          }
        }
      }
    }
    return std::nullopt;
  }
};

ExactTargetSolver::ExactTargetSolver(const Csp2Instance& inst, MatmulKernel kernel,
                                     OpCounters* counters)
    : impl_(std::make_unique<Impl>(inst, kernel, counters)) {}
ExactTargetSolver::~ExactTargetSolver() = default;
ExactTargetSolver::ExactTargetSolver(ExactTargetSolver&&) noexcept = default;
ExactTargetSolver& ExactTargetSolver::operator=(ExactTargetSolver&&) noexcept = default;

std::optional<CspAssignment> ExactTargetSolver::solve(std::int64_t kv, std::int64_t ke) const {
  return impl_->solve(kv, ke);
}

const std::vector<std::int64_t>& ExactTargetSolver::vertex_values(int var) const {
  return impl_->vvalues[var];
}

const std::vector<std::int64_t>& ExactTargetSolver::pair_values(int p) const {
  return impl_->pvalues[p];
}

std::optional<CspAssignment> solve_exact_target(const Csp2Instance& inst, MatmulKernel kernel,
                                                OpCounters* counters) {
  ExactTargetSolver solver(inst, kernel, counters);
  return solver.solve(inst.kv_target, inst.ke_target);
}

std::optional<CspAssignment> solve_exact_target_naive(const Csp2Instance& inst) {
  inst.validate();
  for (int a = 0; a < inst.domain_size(0); ++a)
    for (int b = 0; b < inst.domain_size(1); ++b)
      for (int c = 0; c < inst.domain_size(2); ++c) {
        CspAssignment asg{{a, b, c}};
        if (inst.assignment_vertex_total(asg.value) == inst.kv_target &&
            inst.assignment_pair_total(asg.value) == inst.ke_target)
          return asg;
      }
  return std::nullopt;
}

void CspNInstance::validate() const {
  if (n_vars < 0 || domain_size < 1) throw PreconditionError("bad CSP shape");
  if (unary.size() != static_cast<std::size_t>(n_vars))
    throw PreconditionError("unary table count does not match variable count");
  for (const auto& u : unary)
    if (u.size() != static_cast<std::size_t>(domain_size))
      throw PreconditionError("unary table shape mismatch");
  for (const auto& t : pairs) {
    if (t.i < 0 || t.j >= n_vars || t.i >= t.j) throw PreconditionError("bad pair table indices");
    if (t.w.size() != static_cast<std::size_t>(domain_size) * domain_size)
      throw PreconditionError("pair table shape mismatch");
  }
}

std::vector<int> GroupedCsp::decode(int g, int value_index) const {
  std::vector<int> out(groups[g].size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    out[t] = value_index % domain_size;
    value_index /= domain_size;
  }
  return out;
}

GroupedCsp group_into_three(const CspNInstance& inst) {
  inst.validate();
  GroupedCsp out;
  out.domain_size = inst.domain_size;
  int n = inst.n_vars;
  int g0 = (n + 2) / 3;
  int g1 = (n - g0 + 1) / 2;
  int next = 0;
  for (int g = 0; g < 3; ++g) {
    int size = g == 0 ? g0 : (g == 1 ? g1 : n - g0 - g1);
    for (int t = 0; t < size; ++t) out.groups[g].push_back(next++);
  }

  std::array<std::size_t, 3> dom{};
  for (int g = 0; g < 3; ++g) {
    std::size_t d = 1;
    for (std::size_t t = 0; t < out.groups[g].size(); ++t) {
      d *= static_cast<std::size_t>(inst.domain_size);
      if (d > (std::size_t{1} << 24)) throw CapError("grouped domain too large");
    }
    dom[g] = d;
  }

  std::vector<int> gof(n), pos(n);
  for (int g = 0; g < 3; ++g)
    for (std::size_t t = 0; t < out.groups[g].size(); ++t) {
      gof[out.groups[g][t]] = g;
      pos[out.groups[g][t]] = static_cast<int>(t);
    }

  // bucket pair tables: internal to a group vs. crossing a group pair
  std::array<std::vector<const CspNInstance::PairTable*>, 3> internal;
  std::array<std::vector<const CspNInstance::PairTable*>, 3> crossing;
  auto pair_index = [](int gi, int gj) {
    if (gi == 0 && gj == 1) return 0;
    if (gi == 1 && gj == 2) return 1;
    return 2;  // (0,2)
  };
  for (const auto& t : inst.pairs) {
    int gi = gof[t.i], gj = gof[t.j];
    if (gi == gj)
      internal[gi].push_back(&t);
    else
      crossing[pair_index(std::min(gi, gj), std::max(gi, gj))].push_back(&t);
  }

  auto digits_of = [&](int g, std::size_t vi) {
    std::vector<int> d(out.groups[g].size());
    for (std::size_t t = 0; t < d.size(); ++t) {
      d[t] = static_cast<int>(vi % inst.domain_size);
      vi /= inst.domain_size;
    }
    return d;
  };

  for (int g = 0; g < 3; ++g) {
    auto& vw = out.instance.vertex_weights[g];
    vw.resize(dom[g]);
    for (std::size_t vi = 0; vi < dom[g]; ++vi) {
      std::vector<int> dig = digits_of(g, vi);
      unsigned __int128 acc = 0;
      for (std::size_t t = 0; t < dig.size(); ++t)
        acc += static_cast<unsigned __int128>(inst.unary[out.groups[g][t]][dig[t]]);
      for (const auto* t : internal[g])
        acc += static_cast<unsigned __int128>(inst.pairw(*t, dig[pos[t->i]], dig[pos[t->j]]));
      vw[vi] = checked_total(acc, "grouped vertex weight");
    }
  }
  for (int p = 0; p < 3; ++p) {
    int gi = kCspPairs[p][0], gj = kCspPairs[p][1];
    auto& pw = out.instance.pair_weights[p];
    pw.resize(dom[gi] * dom[gj]);
    // cache digit decompositions of the smaller side? sizes are modest, decode on the fly
    for (std::size_t vi = 0; vi < dom[gi]; ++vi) {
      std::vector<int> di = digits_of(gi, vi);
      for (std::size_t vj = 0; vj < dom[gj]; ++vj) {
        std::vector<int> dj = digits_of(gj, vj);
        unsigned __int128 acc = 0;
        for (const auto* t : crossing[p]) {
          // table endpoints: t->i in the lower-numbered group (groups are consecutive)
          int a = gof[t->i] == gi ? di[pos[t->i]] : dj[pos[t->i]];
          int b = gof[t->j] == gj ? dj[pos[t->j]] : di[pos[t->j]];
          acc += static_cast<unsigned __int128>(inst.pairw(*t, a, b));
        }
        pw[vi * dom[gj] + vj] = checked_total(acc, "grouped pair weight");
      }
    }
  }
  return out;
}

}  // namespace clustercut
