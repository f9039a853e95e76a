#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "clustercut/counters.hpp"
#include "clustercut/errors.hpp"
#include "clustercut/matmul.hpp"

namespace clustercut {

inline constexpr std::int64_t kDefaultWeightCap = std::int64_t{1} << 62;

// pair index p covers variables kCspPairs[p]
inline constexpr int kCspPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};

// Weighted 2-CSP over three variables with finite indexed domains. A full
// assignment (a1,a2,a3) satisfies the instance iff its vertex weights sum to
// exactly kv_target and its pair weights sum to exactly ke_target.
struct Csp2Instance {
  std::array<std::vector<std::int64_t>, 3> vertex_weights;  // [var][value]
  // pair_weights[p] is row-major |D_i| x |D_j| for (i,j) = kCspPairs[p]
  std::array<std::vector<std::int64_t>, 3> pair_weights;
  std::int64_t kv_target = 0;
  std::int64_t ke_target = 0;
  std::int64_t weight_cap = kDefaultWeightCap;

  int domain_size(int var) const { return static_cast<int>(vertex_weights[var].size()); }
  std::int64_t pair_weight(int p, int a, int b) const {
    const auto& [i, j] = kCspPairs[p];
    return pair_weights[p][static_cast<std::size_t>(a) * domain_size(j) + b];
  }
  std::int64_t assignment_vertex_total(const std::array<int, 3>& v) const;
  std::int64_t assignment_pair_total(const std::array<int, 3>& v) const;
  // shape consistency, weights in [0, weight_cap]
  void validate() const;
};

struct CspAssignment {
  std::array<int, 3> value;  // domain value index per variable
  friend bool operator==(const CspAssignment&, const CspAssignment&) = default;
};

// Answers repeated (kv, ke) exact-target queries against one weight table.
// Preprocessing groups domain values by attained vertex weight and pair cells
// by attained pair weight; a query enumerates only target decompositions
// built from attained values, then runs matrix-multiplication triangle
// detection on the compatible-value slices.
class ExactTargetSolver {
 public:
  ExactTargetSolver(const Csp2Instance& inst, MatmulKernel kernel = MatmulKernel::kBitpacked,
                    OpCounters* counters = nullptr);
  ~ExactTargetSolver();
  ExactTargetSolver(ExactTargetSolver&&) noexcept;
  ExactTargetSolver& operator=(ExactTargetSolver&&) noexcept;

  std::optional<CspAssignment> solve(std::int64_t kv, std::int64_t ke) const;

  // attained vertex weights of a variable, sorted ascending
  const std::vector<std::int64_t>& vertex_values(int var) const;
  // attained pair weights of a pair, sorted ascending
  const std::vector<std::int64_t>& pair_values(int p) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot solve against the instance's embedded targets.
std::optional<CspAssignment> solve_exact_target(const Csp2Instance& inst,
                                                MatmulKernel kernel = MatmulKernel::kBitpacked,
                                                OpCounters* counters = nullptr);
// Reference implementation: plain triple loop over all assignments.
std::optional<CspAssignment> solve_exact_target_naive(const Csp2Instance& inst);

// Weighted 2-CSP over n variables with a uniform domain, sparse pair tables.
struct CspNInstance {
  int n_vars = 0;
  int domain_size = 0;
  std::vector<std::vector<std::int64_t>> unary;  // [var][value]
  struct PairTable {
    int i, j;  // i < j
    std::vector<std::int64_t> w;  // row-major domain_size x domain_size
  };
  std::vector<PairTable> pairs;

  std::int64_t pairw(const PairTable& t, int a, int b) const {
    return t.w[static_cast<std::size_t>(a) * domain_size + b];
  }
  void validate() const;
};

// n-variable instance folded to three super-variables over consecutive groups
// of sizes ceil(n/3) / floor. A super-value encodes one assignment of its
// group (mixed radix, first group member least significant). Internal pair
// weights fold into vertex weights, cross-group pair weights into pair
// weights, so every full assignment keeps its total weight exactly.
struct GroupedCsp {
  Csp2Instance instance;  // targets left at 0
  std::array<std::vector<int>, 3> groups;
  int domain_size = 0;  // of the original instance

  // super-value index -> per-variable values, aligned with groups[g]
  std::vector<int> decode(int g, int value_index) const;
};

GroupedCsp group_into_three(const CspNInstance& inst);

}  // namespace clustercut
