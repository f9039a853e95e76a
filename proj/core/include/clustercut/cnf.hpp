#pragma once

#include <vector>

#include "clustercut/errors.hpp"

namespace clustercut {

// sign 0 = positive occurrence of the variable, 1 = negated
struct Literal {
  int var;
  int sign;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

class Cnf {
 public:
  Cnf(int n_vars, std::vector<Clause> clauses);

  int n_vars() const { return n_vars_; }
  int m() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  // every clause has exactly three literals over three distinct variables
  bool is_three_uniform() const;
  // any two distinct clauses share at most one literal
  bool is_linear() const;
  // every variable occurs (in either polarity) in exactly four clauses
  bool is_four_regular() const;

  // preconditions shared by the NAE-3-SAT reduction; throws naming the
  // property that failed
  void validate_gadget_input() const;

 private:
  int n_vars_;
  std::vector<Clause> clauses_;
};

}  // namespace clustercut
