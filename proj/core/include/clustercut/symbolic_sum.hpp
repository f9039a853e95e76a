#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "clustercut/rational.hpp"

namespace clustercut {

// Exact value of the form  q + sum_t c_t * r_t^(1/p)  with integer radicands
// r_t >= 0 and rational coefficients c_t. Distances between integer points in
// the l_p metric have this shape (the radicand is the integer sum of |dx|^p),
// so clustering costs can be added and compared without rounding.
//
// Canonical form: radicands are p-th-power-free and > 1. Perfect p-th power
// factors move into the coefficient, radicands 0 and 1 fold into the rational
// part, and for p == 1 every term folds into the rational part. Two sums with
// the same p are equal iff their canonical forms match (p-th roots of distinct
// p-free integers are linearly independent over Q).
class SymbolicSum {
 public:
  explicit SymbolicSum(int p = 1);

  int metric_exponent() const { return p_; }

  void add_rational(const Rational& q) { rational_ += q; }
  // adds coeff * radicand^(1/p)
  void add_root(std::int64_t radicand, const Rational& coeff);

  SymbolicSum& operator+=(const SymbolicSum& other);
  SymbolicSum& operator-=(const SymbolicSum& other);
  friend SymbolicSum operator+(SymbolicSum a, const SymbolicSum& b) { return a += b; }
  friend SymbolicSum operator-(SymbolicSum a, const SymbolicSum& b) { return a -= b; }
  void scale(const Rational& c);

  bool operator==(const SymbolicSum& other) const;
  bool operator!=(const SymbolicSum& other) const { return !(*this == other); }

  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && rational_ == 0; }
  const Rational& rational_part() const { return rational_; }
  const std::map<std::int64_t, Rational>& root_terms() const { return terms_; }

  double value() const;
  std::string str() const;  // e.g. "3/2 + 4*2^(1/2)"

 private:
  int p_;
  Rational rational_;
  std::map<std::int64_t, Rational> terms_;  // canonical radicand -> coefficient
};

}  // namespace clustercut
