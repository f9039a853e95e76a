#include "clustercut/cnf.hpp"

#include <algorithm>

namespace clustercut {

Cnf::Cnf(int n_vars, std::vector<Clause> clauses)
    : n_vars_(n_vars), clauses_(std::move(clauses)) {
  if (n_vars_ < 0) throw PreconditionError("negative variable count");
  for (Clause& c : clauses_) {
    for (const Literal& l : c) {
      if (l.var < 0 || l.var >= n_vars_) throw PreconditionError("literal variable out of range");
      if (l.sign != 0 && l.sign != 1) throw PreconditionError("literal sign must be 0 or 1");
    }
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw PreconditionError("repeated literal in clause");
  }
}

bool Cnf::is_three_uniform() const {
  for (const Clause& c : clauses_) {
    if (c.size() != 3) return false;
    // literals are sorted by (var, sign); distinct vars means no equal neighbors
    if (c[0].var == c[1].var || c[1].var == c[2].var) return false;
  }
  return true;
}

bool Cnf::is_linear() const {
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    for (std::size_t j = i + 1; j < clauses_.size(); ++j) {
      int shared = 0;
      for (const Literal& a : clauses_[i])
        shared += static_cast<int>(std::binary_search(clauses_[j].begin(), clauses_[j].end(), a));
      if (shared > 1) return false;
    }
  return true;
}

bool Cnf::is_four_regular() const {
  std::vector<int> occ(n_vars_, 0);
  for (const Clause& c : clauses_)
    for (const Literal& l : c) ++occ[l.var];
  return std::all_of(occ.begin(), occ.end(), [](int x) { return x == 4; });
}

void Cnf::validate_gadget_input() const {
  if (!is_three_uniform())
    throw PreconditionError("CNF is not 3-uniform with distinct variables per clause");
  if (!is_linear())
    throw PreconditionError("CNF is not linear: two clauses share more than one literal");
  if (!is_four_regular())
    throw PreconditionError("CNF is not 4-regular: some variable does not occur exactly 4 times");
}

}  // namespace clustercut
