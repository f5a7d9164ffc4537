#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "supercluster/numeric.hpp"

namespace supercluster {

/// Exact element of Q(zeta_p), p prime.
///
/// Stored as sum_m c_m zeta^m over the basis 1, zeta, ..., zeta^(p-2), which
/// is canonical after reducing by 1 + zeta + ... + zeta^(p-1) = 0. Equality
/// is coefficient-wise. For p = 2 the field is Q and zeta = -1.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(2) {}
  explicit Cyclotomic(int p);
  Cyclotomic(int p, const Rational& value);
  /// Throws ArgumentError unless coeffs has p - 1 entries.
  Cyclotomic(int p, std::vector<Rational> coeffs);

  /// zeta_p^e for any integer e.
  static Cyclotomic zeta_power(int p, long long e);

  int p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True if the value lies in Q.
  bool is_rational() const;
  /// The rational value; throws DomainError if not rational.
  Rational rational() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

  /// Galois automorphism zeta -> zeta^a, gcd(a, p) = 1.
  Cyclotomic galois(int a) const;
  /// Complex conjugation, zeta -> zeta^(p-1).
  Cyclotomic conj() const { return galois(p_ - 1); }
  /// Multiplicative inverse via the norm; throws DomainError for zero.
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  /// Polynomial rendering in z = zeta_p, e.g. "2", "-2", "1-z", "1/2+3*z^2".
  std::string to_poly_string() const;

 private:
  static std::vector<Rational> reduce(int p, std::vector<Rational> full);

  int p_;
  std::vector<Rational> coeffs_;
};

/// Accumulates sum_m count_m zeta^m with integer counts, for fast character sums.
class ZetaHistogram {
 public:
  explicit ZetaHistogram(int p) : counts_(p, 0) {}
  void add(int exponent, long long count = 1) { counts_[((exponent % p()) + p()) % p()] += count; }
  int p() const { return static_cast<int>(counts_.size()); }
  Cyclotomic value() const;

 private:
  std::vector<long long> counts_;
};

Cyclotomic parse_cyclotomic(int p, const std::vector<std::string>& coeffs);

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

/// Rank over Q(zeta_p) by exact Gaussian elimination.
int rank(CycMatrix a);
/// Inverse of a square matrix; throws DomainError if singular.
CycMatrix inverse(CycMatrix a);

}  // namespace supercluster
