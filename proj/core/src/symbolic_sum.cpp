#include "clustercut/symbolic_sum.hpp"

#include <cmath>
#include <sstream>

namespace clustercut {

SymbolicSum::SymbolicSum(int p) : p_(p) {
  if (p < 1) throw PreconditionError("metric exponent must be >= 1");
}

namespace {

// largest k with k^p <= v (p >= 2, v >= 0)
std::int64_t ipow_checked(std::int64_t base, int p, std::int64_t limit) {
  std::int64_t r = 1;
  for (int i = 0; i < p; ++i) {
    if (r > limit / base) return limit + 1;  // would exceed
    r *= base;
  }
  return r;
}

}  // namespace

void SymbolicSum::add_root(std::int64_t radicand, const Rational& coeff) {
  if (radicand < 0) throw PreconditionError("negative radicand");
  if (coeff == 0 || radicand == 0) return;
  if (p_ == 1 || radicand == 1) {
    rational_ += coeff * Rational(radicand);
    return;
  }
  // pull out the largest p-th power factor
  std::int64_t rem = radicand;
  std::int64_t outside = 1;
  for (std::int64_t f = 2;; ++f) {
    std::int64_t fp = ipow_checked(f, p_, rem);
    if (fp > rem) break;
    while (rem % fp == 0) {
      rem /= fp;
      outside *= f;
    }
  }
  Rational c = coeff * Rational(outside);
  if (rem == 1) {
    rational_ += c;
    return;
  }
  Rational& slot = terms_[rem];
  slot += c;
  if (slot == 0) terms_.erase(rem);
}

SymbolicSum& SymbolicSum::operator+=(const SymbolicSum& other) {
  if (!other.terms_.empty() && !terms_.empty() && p_ != other.p_)
    throw PreconditionError("mixing radicals with different metric exponents");
  if (terms_.empty() && !other.terms_.empty()) p_ = other.p_;
  rational_ += other.rational_;
  for (const auto& [rad, c] : other.terms_) {
    Rational& slot = terms_[rad];
    slot += c;
    if (slot == 0) terms_.erase(rad);
  }
  return *this;
}

SymbolicSum& SymbolicSum::operator-=(const SymbolicSum& other) {
  SymbolicSum neg = other;
  neg.scale(Rational(-1));
  return *this += neg;
}

void SymbolicSum::scale(const Rational& c) {
  rational_ *= c;
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [rad, coeff] : terms_) coeff *= c;
}

bool SymbolicSum::operator==(const SymbolicSum& other) const {
  if (rational_ != other.rational_) return false;
  if (terms_ != other.terms_) return false;
  if (!terms_.empty() && p_ != other.p_) return false;
  return true;
}

double SymbolicSum::value() const {
  double v = rat_double(rational_);
  for (const auto& [rad, c] : terms_)
    v += rat_double(c) * std::pow(static_cast<double>(rad), 1.0 / p_);
  return v;
}

std::string SymbolicSum::str() const {
  if (is_rational()) return rat_string(rational_);
  std::ostringstream os;
  bool first = true;
  if (rational_ != 0) {
    os << rat_string(rational_);
    first = false;
  }
  for (const auto& [rad, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rat_string(c) << "*";
    os << rad << "^(1/" << p_ << ")";
  }
  return os.str();
}

}  // namespace clustercut
