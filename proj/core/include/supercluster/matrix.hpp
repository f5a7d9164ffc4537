#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "supercluster/errors.hpp"
#include "supercluster/gf.hpp"

namespace supercluster {

/// A 1-based strictly-upper position (i, j), i < j.
struct Position {
  int i = 0;
  int j = 0;

  friend constexpr bool operator==(Position, Position) = default;
  friend constexpr auto operator<=>(Position, Position) = default;
};

struct Entry {
  Position pos;
  Elem value;

  friend bool operator==(const Entry&, const Entry&) = default;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// Number of strictly-upper positions of an n x n matrix.
constexpr int num_positions(int n) { return n * (n - 1) / 2; }

/// Positions (1,2), (1,3), ..., (n-1,n) in row-major order.
std::vector<Position> positions_row_major(int n);

namespace detail {

struct NilTag {};
struct FunTag {};

/// Sparse strictly-upper-triangular array: only non-zero entries are stored,
/// sorted by position. Shared by nilpotent matrices and functionals, which
/// differ only in role.
template <class Tag>
class UpperSparse {
 public:
  UpperSparse() = default;
  explicit UpperSparse(int n) : n_(n) {
    if (n < 1) throw ArgumentError("matrix size must be >= 1");
  }
  UpperSparse(int n, std::vector<Entry> entries) : UpperSparse(n) {
    for (const Entry& e : entries) set(e.pos.i, e.pos.j, e.value);
  }

  static UpperSparse unit(int n, int i, int j, Elem a) {
    UpperSparse out(n);
    out.set(i, j, a);
    return out;
  }

  int n() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  Elem at(int i, int j) const {
    check(i, j);
    auto it = find(Position{i, j});
    return (it != entries_.end() && it->pos == Position{i, j}) ? it->value : Elem{};
  }

  void set(int i, int j, Elem v) {
    check(i, j);
    const Position p{i, j};
    auto it = find(p);
    const bool present = it != entries_.end() && it->pos == p;
    if (v.is_zero()) {
      if (present) entries_.erase(it);
    } else if (present) {
      it->value = v;
    } else {
      entries_.insert(it, Entry{p, v});
    }
  }

  std::vector<Position> support() const {
    std::vector<Position> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.pos);
    return out;
  }

  friend bool operator==(const UpperSparse&, const UpperSparse&) = default;
  friend auto operator<=>(const UpperSparse&, const UpperSparse&) = default;

 private:
  void check(int i, int j) const {
    if (i < 1 || j > n_ || i >= j) {
      throw ArgumentError("position (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not strictly upper in size " + std::to_string(n_));
    }
  }
  std::vector<Entry>::iterator find(Position p) {
    return std::lower_bound(entries_.begin(), entries_.end(), p,
                            [](const Entry& e, Position x) { return e.pos < x; });
  }
  std::vector<Entry>::const_iterator find(Position p) const {
    return std::lower_bound(entries_.begin(), entries_.end(), p,
                            [](const Entry& e, Position x) { return e.pos < x; });
  }

  int n_ = 1;
  std::vector<Entry> entries_;
};

}  // namespace detail

/// Element of u(n, F_q): strictly upper triangular matrix.
using NilMatrix = detail::UpperSparse<detail::NilTag>;
/// Element of u*(n, F_q); coefficient (i,j) is the value on e_ij.
using Functional = detail::UpperSparse<detail::FunTag>;

/// Element I + off of U(n, F_q).
class UniMatrix {
 public:
  UniMatrix() = default;
  explicit UniMatrix(NilMatrix off) : off_(std::move(off)) {}
  static UniMatrix identity(int n) { return UniMatrix(NilMatrix(n)); }
  /// I + a e_ij
  static UniMatrix elementary(int n, int i, int j, Elem a) {
    return UniMatrix(NilMatrix::unit(n, i, j, a));
  }

  int n() const { return off_.n(); }
  const NilMatrix& off() const { return off_; }
  bool is_identity() const { return off_.is_zero(); }

  friend bool operator==(const UniMatrix&, const UniMatrix&) = default;
  friend auto operator<=>(const UniMatrix&, const UniMatrix&) = default;

 private:
  NilMatrix off_;
};

/// e(lambda): the matrix with the functional's coefficients as entries.
inline NilMatrix to_matrix(const Functional& f) { return NilMatrix(f.n(), f.entries()); }
/// epsilon(X): the functional whose coefficients are X's entries.
inline Functional to_functional(const NilMatrix& x) { return Functional(x.n(), x.entries()); }

NilMatrix nil_add(const Field& F, const NilMatrix& x, const NilMatrix& y);
NilMatrix nil_mul(const Field& F, const NilMatrix& x, const NilMatrix& y);
NilMatrix nil_scale(const Field& F, Elem a, const NilMatrix& x);
Functional fun_add(const Field& F, const Functional& x, const Functional& y);
Functional fun_scale(const Field& F, Elem a, const Functional& x);

UniMatrix group_mul(const Field& F, const UniMatrix& g, const UniMatrix& h);
/// I - X + X^2 - ... (at most n-1 terms).
UniMatrix group_inv(const Field& F, const UniMatrix& g);
/// h g h^-1
UniMatrix conjugate(const Field& F, const UniMatrix& h, const UniMatrix& g);

/// g X
NilMatrix act_left(const Field& F, const UniMatrix& g, const NilMatrix& x);
/// X g
NilMatrix act_right(const Field& F, const NilMatrix& x, const UniMatrix& g);
/// g X g^-1
NilMatrix act_adjoint(const Field& F, const UniMatrix& g, const NilMatrix& x);

/// (g * lambda)(X) = lambda(X g)
Functional coact_left(const Field& F, const UniMatrix& g, const Functional& f);
/// (lambda * g)(X) = lambda(g X)
Functional coact_right(const Field& F, const Functional& f, const UniMatrix& g);
/// lambda^g(X) = lambda(g^-1 X g)
Functional coact_coadjoint(const Field& F, const Functional& f, const UniMatrix& g);

/// sum_(i,j) lambda_ij x_ij
Elem eval(const Field& F, const Functional& f, const NilMatrix& x);

/// Rank over F_q of a dense rows x cols matrix given row-major.
int rank(const Field& F, std::vector<Elem> a, int rows, int cols);
/// Rank of the full n x n matrix X.
int rank(const Field& F, const NilMatrix& x);

/// Bijection between points of u(n,F_q) (or u*) and integers in [0, q^N),
/// N = n(n-1)/2. Code order is lexicographic on the row-major value tuple.
class PointCodec {
 public:
  PointCodec(const Field& F, int n);

  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t encode(const NilMatrix& x) const { return encode_entries(x.entries()); }
  std::uint64_t encode(const Functional& f) const { return encode_entries(f.entries()); }
  NilMatrix decode_matrix(std::uint64_t code) const { return NilMatrix(n_, decode_entries(code)); }
  Functional decode_functional(std::uint64_t code) const { return Functional(n_, decode_entries(code)); }

 private:
  std::uint64_t encode_entries(const std::vector<Entry>& entries) const;
  std::vector<Entry> decode_entries(std::uint64_t code) const;

  int n_;
  int q_;
  std::vector<Position> positions_;
  std::vector<std::uint64_t> weight_;  // q^(N-1-m) for row-major position m
  std::uint64_t size_;
};

}  // namespace supercluster
