#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "supercluster/gf.hpp"
#include "supercluster/matrix.hpp"

namespace supercluster {

struct Cell {
  int i = 0;
  int j = 0;
  Elem a;

  Position pos() const { return {i, j}; }
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// True iff the positions use each row and each column at most once.
bool is_rook_placement(const std::vector<Position>& support);

/// A rook placement of non-zero values on strictly-upper positions.
///
/// The same type represents adjoint templates (matrices) and coadjoint
/// templates (functionals). Cells are kept sorted by (i, j). Values are part
/// of the identity: no normalization is applied.
///
/// Ordering is graded: fewer cells first, then cell positions compared by
/// (j - i, i), then value codes. Enumerations and tables use this order.
class Template {
 public:
  Template() = default;
  explicit Template(int n);
  /// Throws ArgumentError unless the cells form a rook placement with
  /// non-zero values inside an n x n strictly-upper triangle.
  Template(int n, std::vector<Cell> cells);

  /// Throws ArgumentError if the support is not a rook placement.
  static Template from_functional(const Functional& f);
  static Template from_matrix(const NilMatrix& x);

  int n() const { return n_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  Elem at(int i, int j) const;

  Functional functional() const;
  NilMatrix matrix() const;
  std::vector<Position> support() const;

  friend bool operator==(const Template& a, const Template& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }
  friend std::strong_ordering operator<=>(const Template& a, const Template& b);

 private:
  int n_ = 1;
  std::vector<Cell> cells_;
};

/// "(i,j)=v" cells joined by ";"; the empty template prints "0".
std::string format_template(const Field& F, const Template& t);
/// Inverse of format_template.
Template parse_template(const Field& F, int n, std::string_view text);

}  // namespace supercluster
