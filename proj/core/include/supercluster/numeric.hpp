#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace supercluster {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt ipow(long long base, unsigned exp) { return ipow(BigInt(base), exp); }

// q^e for a possibly negative exponent.
inline Rational rpow(long long base, long long exp) {
  BigInt p = ipow(base, static_cast<unsigned>(exp < 0 ? -exp : exp));
  if (exp >= 0) return Rational(p);
  return Rational(BigInt(1), p);
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "n/d" with d > 0, always including the denominator.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace supercluster
