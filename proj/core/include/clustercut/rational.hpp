#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "clustercut/errors.hpp"

namespace clustercut {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. cpp_rational keeps values canonical
// (gcd(num,den)=1, den>0), which comparisons and serialization rely on.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline std::string rat_string(const Rational& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline double rat_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace clustercut
