#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clustercut/counters.hpp"
#include "clustercut/rational.hpp"
#include "clustercut/symbolic_sum.hpp"

namespace clustercut {

// Outcome of a solve: exact optimum, a witness assignment (cluster index or
// side per item), and how many candidates / target queries were examined.
struct SolveReport {
  std::optional<Rational> optimum;         // set when the optimum is rational
  std::optional<SymbolicSum> optimum_sym;  // set for radical-valued l_p costs
  std::vector<int> witness;
  std::uint64_t explored = 0;

  double optimum_value() const;
};

// Stable JSON rendering: rationals as decimal num/den strings, keys in fixed
// order. Counters are appended under "counters" when given.
std::string report_to_json(const SolveReport& r, const CounterSnapshot* counters = nullptr);

}  // namespace clustercut
