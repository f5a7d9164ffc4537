#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace supercluster {

/// An element of GF(p^k), stored as the packed code sum_i c_i p^i of its
/// polynomial coefficients (degree < k). Only meaningful together with the
/// Field that produced it.
struct Elem {
  std::uint16_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
  constexpr bool is_zero() const { return code == 0; }
};

inline constexpr int kDefaultMaxFieldSize = 64;

/// The finite field F_q, q = p^k, represented as Z_p[x] / (modulus).
///
/// Immutable and cheap to copy: the arithmetic tables are shared between
/// copies. The modulus is the smallest monic irreducible of degree k when
/// candidates are ordered by the code of their lower coefficients, so every
/// run picks the same one.
class Field {
 public:
  /// Throws ArgumentError if p is not prime, k < 1, or p^k > max_q.
  static Field make(int p, int k, int max_q = kDefaultMaxFieldSize);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Monic modulus coefficients c_0..c_k (c_k = 1).
  const std::vector<int>& modulus() const { return tables_->modulus; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of the integer v under Z -> Z_p -> F_q.
  Elem from_int(long long v) const;
  /// Throws ArgumentError on wrong length or residues outside [0, p).
  Elem from_coeffs(const std::vector<int>& coeffs) const;
  Elem from_code(int code) const;
  std::vector<int> coeffs(Elem a) const;
  bool contains(Elem a) const { return a.code < q_; }

  Elem add(Elem a, Elem b) const { return Elem{tables_->add[a.code * q_ + b.code]}; }
  Elem mul(Elem a, Elem b) const { return Elem{tables_->mul[a.code * q_ + b.code]}; }
  Elem neg(Elem a) const { return Elem{tables_->neg[a.code]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// Throws DomainError for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Absolute trace a + a^p + ... + a^(p^(k-1)), as a residue in [0, p).
  int trace(Elem a) const { return tables_->trace[a.code]; }

  /// All q elements in code order (zero first).
  std::vector<Elem> elements() const;
  /// The q - 1 non-zero elements in code order.
  std::vector<Elem> nonzero() const;

  /// Prime fields print "0".."p-1"; extension fields print "[c0,c1,...]".
  std::string format(Elem a) const;
  /// Inverse of format(). Prime-field input may be any integer literal (reduced mod p).
  Elem parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  struct Tables {
    std::vector<int> modulus;
    std::vector<std::uint16_t> add, mul, neg, inv;
    std::vector<int> trace;
  };

  Field(int p, int k, std::shared_ptr<const Tables> tables)
      : p_(p), k_(k), q_(static_cast<int>(tables->neg.size())), tables_(std::move(tables)) {}

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(long long n);

/// Irreducibility over Z_p by trial division against every monic polynomial
/// of degree 1..deg/2. Coefficients are c_0..c_deg, monic.
bool is_irreducible(const std::vector<int>& poly, int p);

}  // namespace supercluster
