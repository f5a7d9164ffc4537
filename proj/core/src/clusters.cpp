#include "supercluster/clusters.hpp"

#include <algorithm>
#include <set>

namespace supercluster {
namespace {

// n x n working copy, 1-based.
class Grid {
 public:
  explicit Grid(int n) : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1)) {}
  Elem& operator()(int i, int j) { return cells_[i * (n_ + 1) + j]; }
  Elem operator()(int i, int j) const { return cells_[i * (n_ + 1) + j]; }

 private:
  int n_;
  std::vector<Elem> cells_;
};

template <class T>
Grid to_grid(const T& s) {
  Grid g(s.n());
  for (const Entry& e : s.entries()) g(e.pos.i, e.pos.j) = e.value;
  return g;
}

template <class T>
T from_grid(const Grid& g, int n) {
  T out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.set(i, j, g(i, j));
  }
  return out;
}

struct WitnessBuilder {
  const Field& F;
  int n;
  UniMatrix left = UniMatrix::identity(n);
  UniMatrix right = UniMatrix::identity(n);
  std::vector<ElementaryOp> ops{};

  void on_left(int i, int j, Elem a) {
    ops.push_back({ElementaryOp::Side::kLeft, i, j, a});
    left = group_mul(F, UniMatrix::elementary(n, i, j, a), left);
  }
  void on_right(int i, int j, Elem a) {
    ops.push_back({ElementaryOp::Side::kRight, i, j, a});
    right = group_mul(F, right, UniMatrix::elementary(n, i, j, a));
  }
};

// Independent rows of `rows` (each of length len), in reduced echelon form.
std::vector<std::vector<Elem>> echelon_basis(const Field& F, std::vector<std::vector<Elem>> rows,
                                             int len) {
  std::vector<std::vector<Elem>> basis;
  std::vector<int> pivots;
  for (auto& row : rows) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Elem c = row[pivots[b]];
      if (c.is_zero()) continue;
      for (int m = 0; m < len; ++m) row[m] = F.sub(row[m], F.mul(c, basis[b][m]));
    }
    int pivot = -1;
    for (int m = 0; m < len; ++m) {
      if (!row[m].is_zero()) {
        pivot = m;
        break;
      }
    }
    if (pivot < 0) continue;
    const Elem inv = F.inv(row[pivot]);
    for (int m = 0; m < len; ++m) row[m] = F.mul(inv, row[m]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Elem c = basis[b][pivot];
      if (c.is_zero()) continue;
      for (int m = 0; m < len; ++m) basis[b][m] = F.sub(basis[b][m], F.mul(c, row[m]));
    }
    basis.push_back(std::move(row));
    pivots.push_back(pivot);
  }
  return basis;
}

std::vector<Elem> to_vector(const Functional& f, const std::vector<Position>& positions) {
  std::vector<Elem> v(positions.size());
  for (std::size_t m = 0; m < positions.size(); ++m) v[m] = f.at(positions[m].i, positions[m].j);
  return v;
}

Functional from_vector(int n, const std::vector<Elem>& v, const std::vector<Position>& positions) {
  Functional f(n);
  for (std::size_t m = 0; m < positions.size(); ++m) f.set(positions[m].i, positions[m].j, v[m]);
  return f;
}

// Spanning set of L^(lambda): for Y = e_kl, X -> lambda(X e_kl) = sum_{a<k} lambda_al eps_ak.
std::vector<std::vector<Elem>> lhat_spanning(const Field& F, const Functional& f,
                                             const std::vector<Position>& positions) {
  const int n = f.n();
  std::vector<std::vector<Elem>> rows;
  for (const Position& y : positions) {
    Functional mu(n);
    for (const Entry& e : f.entries()) {
      if (e.pos.j == y.j && e.pos.i < y.i) mu.set(e.pos.i, y.i, e.value);
    }
    if (!mu.is_zero()) rows.push_back(to_vector(mu, positions));
  }
  (void)F;
  return rows;
}

// Spanning set of R^(lambda): for Y = e_kl, X -> lambda(e_kl X) = sum_{b>l} lambda_kb eps_lb.
std::vector<std::vector<Elem>> rhat_spanning(const Field& F, const Functional& f,
                                             const std::vector<Position>& positions) {
  const int n = f.n();
  std::vector<std::vector<Elem>> rows;
  for (const Position& y : positions) {
    Functional nu(n);
    for (const Entry& e : f.entries()) {
      if (e.pos.i == y.i && e.pos.j > y.j) nu.set(y.j, e.pos.j, e.value);
    }
    if (!nu.is_zero()) rows.push_back(to_vector(nu, positions));
  }
  (void)F;
  return rows;
}

int span_rank(const Field& F, const std::vector<std::vector<Elem>>& rows, int len) {
  return static_cast<int>(echelon_basis(F, rows, len).size());
}

}  // namespace

Reduction adjoint_template_of(const Field& F, const NilMatrix& x) {
  const int n = x.n();
  Grid m = to_grid(x);
  WitnessBuilder w{F, n};
  std::vector<int> row_pivot(n + 1, 0);

  for (int c = 2; c <= n; ++c) {
    // Column operations: clear entries whose row already holds a pivot to the left.
    for (int r = 1; r < c; ++r) {
      if (m(r, c).is_zero() || row_pivot[r] == 0) continue;
      const int cp = row_pivot[r];
      const Elem a = F.neg(F.div(m(r, c), m(r, cp)));
      for (int k = 1; k < c; ++k) m(k, c) = F.add(m(k, c), F.mul(a, m(k, cp)));
      w.on_right(cp, c, a);
    }
    // Row operations: keep the bottom entry.
    int bottom = 0;
    for (int r = c - 1; r >= 1; --r) {
      if (!m(r, c).is_zero()) {
        bottom = r;
        break;
      }
    }
    if (bottom == 0) continue;
    for (int r = 1; r < bottom; ++r) {
      if (m(r, c).is_zero()) continue;
      const Elem a = F.neg(F.div(m(r, c), m(bottom, c)));
      for (int l = bottom + 1; l <= n; ++l) m(r, l) = F.add(m(r, l), F.mul(a, m(bottom, l)));
      w.on_left(r, bottom, a);
    }
    row_pivot[bottom] = c;
  }

  Reduction out{Template::from_matrix(from_grid<NilMatrix>(m, n)), w.left, w.right, std::move(w.ops)};
  if (act_right(F, act_left(F, out.left, x), out.right) != out.tmpl.matrix()) {
    throw InternalError("adjoint reduction witness does not reproduce the template");
  }
  return out;
}

Reduction coadjoint_template_of(const Field& F, const Functional& f) {
  const int n = f.n();
  Grid m = to_grid(f);
  WitnessBuilder w{F, n};
  std::vector<int> row_pivot(n + 1, 0);

  for (int c = n; c >= 2; --c) {
    // Left action by I + a e_{c,cp}: column c += a column cp on rows above c.
    for (int r = 1; r < c; ++r) {
      if (m(r, c).is_zero() || row_pivot[r] == 0) continue;
      const int cp = row_pivot[r];
      const Elem a = F.neg(F.div(m(r, c), m(r, cp)));
      for (int k = 1; k < c; ++k) m(k, c) = F.add(m(k, c), F.mul(a, m(k, cp)));
      w.on_left(c, cp, a);
    }
    // Right action by I + a e_{top,r}: row r += a row top on columns right of r.
    int top = 0;
    for (int r = 1; r < c; ++r) {
      if (!m(r, c).is_zero()) {
        top = r;
        break;
      }
    }
    if (top == 0) continue;
    for (int r = top + 1; r < c; ++r) {
      if (m(r, c).is_zero()) continue;
      const Elem a = F.neg(F.div(m(r, c), m(top, c)));
      for (int l = r + 1; l <= n; ++l) m(r, l) = F.add(m(r, l), F.mul(a, m(top, l)));
      w.on_right(top, r, a);
    }
    row_pivot[top] = c;
  }

  Reduction out{Template::from_functional(from_grid<Functional>(m, n)), w.left, w.right,
                std::move(w.ops)};
  if (coact_right(F, coact_left(F, out.left, f), out.right) != out.tmpl.functional()) {
    throw InternalError("coadjoint reduction witness does not reproduce the template");
  }
  return out;
}

int rank_invariant(const Field& F, int i, int j, const NilMatrix& x) {
  if (i < 1 || j > x.n() || i >= j) throw ArgumentError("rank_invariant: bad window");
  const int w = j - i + 1;
  std::vector<Elem> a(static_cast<std::size_t>(w) * w);
  for (const Entry& e : x.entries()) {
    if (e.pos.i >= i && e.pos.j <= j) a[(e.pos.i - i) * w + (e.pos.j - i)] = e.value;
  }
  return rank(F, std::move(a), w, w);
}

int rank_invariant_dual(const Field& F, int i, int j, const Functional& f) {
  if (i < 1 || j > f.n() || i >= j) throw ArgumentError("rank_invariant_dual: bad window");
  const int rows = i;
  const int cols = f.n() - j + 1;
  std::vector<Elem> a(static_cast<std::size_t>(rows) * cols);
  for (const Entry& e : f.entries()) {
    if (e.pos.i <= i && e.pos.j >= j) a[(e.pos.i - 1) * cols + (e.pos.j - j)] = e.value;
  }
  return rank(F, std::move(a), rows, cols);
}

ClusterInvariants invariants_of(const Template& t) {
  const int n = t.n();
  ClusterInvariants inv;
  inv.d_rows.assign(std::max(n - 1, 0), 0);
  std::vector<int> col_of_row(n + 1, 0), row_of_col(n + 1, 0);
  for (const Cell& c : t.cells()) {
    inv.d += c.j - c.i - 1;
    col_of_row[c.i] = c.j;
    row_of_col[c.j] = c.i;
    for (int k = c.i + 1; k < c.j; ++k) ++inv.d_rows[k - 1];
  }
  // Corner (a,b) with a support position above it in column b and one to its right in row a.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const bool above = row_of_col[b] != 0 && row_of_col[b] < a;
      const bool right = col_of_row[a] > b;
      if (above && right) ++inv.i;
    }
  }
  return inv;
}

OrbitDims orbit_dims(const Field& F, const Functional& f) {
  const auto positions = positions_row_major(f.n());
  const int len = static_cast<int>(positions.size());
  auto l = lhat_spanning(F, f, positions);
  auto r = rhat_spanning(F, f, positions);
  OrbitDims out;
  out.lhat = span_rank(F, l, len);
  out.rhat = span_rank(F, r, len);
  l.insert(l.end(), r.begin(), r.end());
  out.intersection = out.lhat + out.rhat - span_rank(F, l, len);
  return out;
}

int lhat_dim(const Field& F, const Functional& f) { return orbit_dims(F, f).lhat; }
int rhat_dim(const Field& F, const Functional& f) { return orbit_dims(F, f).rhat; }
int intersection_dim(const Field& F, const Functional& f) { return orbit_dims(F, f).intersection; }

std::vector<Functional> lhat_basis(const Field& F, const Functional& f) {
  const auto positions = positions_row_major(f.n());
  std::vector<Functional> out;
  for (const auto& row : echelon_basis(F, lhat_spanning(F, f, positions), static_cast<int>(positions.size()))) {
    out.push_back(from_vector(f.n(), row, positions));
  }
  return out;
}

std::vector<Functional> rhat_basis(const Field& F, const Functional& f) {
  const auto positions = positions_row_major(f.n());
  std::vector<Functional> out;
  for (const auto& row : echelon_basis(F, rhat_spanning(F, f, positions), static_cast<int>(positions.size()))) {
    out.push_back(from_vector(f.n(), row, positions));
  }
  return out;
}

BigInt cluster_size(const Field& F, const Template& t) {
  const auto inv = invariants_of(t);
  return ipow(F.q(), static_cast<unsigned>(2 * inv.d - inv.i));
}

BigInt adjoint_cluster_size(const Field& F, const Template& x) {
  const int n = x.n();
  const NilMatrix m = x.matrix();
  const auto positions = positions_row_major(n);
  const int len = static_cast<int>(positions.size());
  std::vector<std::vector<Elem>> left, right;
  for (const Position& y : positions) {
    const NilMatrix e = NilMatrix::unit(n, y.i, y.j, F.one());
    left.push_back(to_vector(to_functional(nil_mul(F, e, m)), positions));
    right.push_back(to_vector(to_functional(nil_mul(F, m, e)), positions));
  }
  const int dl = span_rank(F, left, len);
  const int dr = span_rank(F, right, len);
  auto both = left;
  both.insert(both.end(), right.begin(), right.end());
  const int dcap = dl + dr - span_rank(F, both, len);
  return ipow(F.q(), static_cast<unsigned>(dl + dr - dcap));
}

std::vector<Cell> primary_components(const Template& t) { return t.cells(); }

std::vector<Template> enumerate_templates(int n, const Field& F, std::uint64_t cap) {
  if (n < 1) throw ArgumentError("enumerate_templates: n must be >= 1");
  const BigInt count = bell_poly(n, F.q());
  if (count > cap) {
    throw ResourceLimitError("B(" + std::to_string(n) + "," + std::to_string(F.q()) + ") = " +
                             count.str() + " templates exceeds the cap " + std::to_string(cap));
  }
  std::vector<Template> out;
  const auto values = F.nonzero();
  std::vector<Cell> cells;
  std::vector<bool> row_used(n + 1, false);
  // Choose for each column j either no cell or a free row i < j.
  auto recurse = [&](auto&& self, int j) -> void {
    if (j > n) {
      out.emplace_back(n, cells);
      return;
    }
    self(self, j + 1);
    for (int i = 1; i < j; ++i) {
      if (row_used[i]) continue;
      row_used[i] = true;
      for (Elem a : values) {
        cells.push_back(Cell{i, j, a});
        self(self, j + 1);
        cells.pop_back();
      }
      row_used[i] = false;
    }
  };
  recurse(recurse, 2);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt bell_poly(int n, long long q) {
  if (n < 0) throw ArgumentError("bell_poly: n must be >= 0");
  std::vector<BigInt> b{1};
  for (int m = 0; m < n; ++m) {
    BigInt next = 0;
    BigInt binom = 1;
    for (int k = 0; k <= m; ++k) {
      next += binom * ipow(q - 1, static_cast<unsigned>(m - k)) * b[k];
      binom = binom * (m - k) / (k + 1);
    }
    b.push_back(next);
  }
  return b[n];
}

std::vector<Functional> span_elements(const Field& F, int n, const std::vector<Functional>& basis) {
  std::vector<Functional> out{Functional(n)};
  for (const Functional& v : basis) {
    std::vector<Functional> next;
    next.reserve(out.size() * F.q());
    for (const Functional& base : out) {
      for (Elem c : F.elements()) next.push_back(fun_add(F, base, fun_scale(F, c, v)));
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Functional> cluster_elements(const Field& F, const Template& t, std::uint64_t cap) {
  const auto inv = invariants_of(t);
  if (ipow(F.q(), static_cast<unsigned>(2 * inv.d)) > cap) {
    throw ResourceLimitError("cluster of " + format_template(F, t) + " exceeds the enumeration cap");
  }
  const int n = t.n();
  const PointCodec codec(F, n);
  const Functional tau = t.functional();
  std::set<std::uint64_t> seen;
  for (const Functional& r : span_elements(F, n, rhat_basis(F, tau))) {
    const Functional rho = fun_add(F, tau, r);
    for (const Functional& l : span_elements(F, n, lhat_basis(F, rho))) {
      seen.insert(codec.encode(fun_add(F, rho, l)));
    }
  }
  std::vector<Functional> out;
  out.reserve(seen.size());
  for (std::uint64_t code : seen) out.push_back(codec.decode_functional(code));
  return out;
}

}  // namespace supercluster
