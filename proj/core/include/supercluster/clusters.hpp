#pragma once

#include <cstdint>
#include <vector>

#include "supercluster/gf.hpp"
#include "supercluster/matrix.hpp"
#include "supercluster/numeric.hpp"
#include "supercluster/template.hpp"

namespace supercluster {

/// One elementary factor I + a e_ij applied on the given side.
struct ElementaryOp {
  enum class Side { kLeft, kRight };
  Side side;
  int i;
  int j;
  Elem a;
};

/// Result of reducing a point to its cluster template, with the witness
/// pair: left . X . right = e(tmpl) on the adjoint side, and
/// left * lambda * right = tmpl on the coadjoint side. `ops` lists the
/// elementary factors in the order they were applied.
struct Reduction {
  Template tmpl;
  UniMatrix left;
  UniMatrix right;
  std::vector<ElementaryOp> ops;
};

/// Sweeps columns left to right: column operations clear entries sharing a
/// row with an earlier pivot, then row operations keep only the bottom entry.
/// The witness is checked before returning (InternalError on mismatch).
Reduction adjoint_template_of(const Field& F, const NilMatrix& x);

/// Mirror of adjoint_template_of on e(lambda) with restricted row/column
/// operations, sweeping right to left and keeping the top entry.
Reduction coadjoint_template_of(const Field& F, const Functional& f);

/// Rank of the window sum_{i <= k < l <= j} x_kl e_kl.
int rank_invariant(const Field& F, int i, int j, const NilMatrix& x);
/// Rank of the window sum_{k <= i < j <= l} lambda_kl e_kl.
int rank_invariant_dual(const Field& F, int i, int j, const Functional& f);

struct ClusterInvariants {
  int d = 0;
  int i = 0;
  /// d_rows[k-1] = d(k, tau) for k = 1..n-1.
  std::vector<int> d_rows;

  friend bool operator==(const ClusterInvariants&, const ClusterInvariants&) = default;
};

/// Combinatorial invariants of a template: d is the total distance of the
/// support to the second diagonal, i counts L-hook corners, d(k) counts
/// support positions (a,b) with a < k < b.
ClusterInvariants invariants_of(const Template& t);

struct OrbitDims {
  int lhat = 0;
  int rhat = 0;
  int intersection = 0;
};

/// Dimensions of L^(lambda) = {X -> lambda(XY)}, R^(lambda) = {X -> lambda(YX)}
/// and their intersection, by exact rank over F_q. Works for any lambda.
OrbitDims orbit_dims(const Field& F, const Functional& f);
int lhat_dim(const Field& F, const Functional& f);
int rhat_dim(const Field& F, const Functional& f);
int intersection_dim(const Field& F, const Functional& f);

/// Bases (row-reduced) of L^(lambda) and R^(lambda).
std::vector<Functional> lhat_basis(const Field& F, const Functional& f);
std::vector<Functional> rhat_basis(const Field& F, const Functional& f);

/// q^(2d - i)
BigInt cluster_size(const Field& F, const Template& t);
/// |U.X| |X.U| / |U.X cap X.U|, each factor q^rank of the spaces {YX}, {XY}.
BigInt adjoint_cluster_size(const Field& F, const Template& x);

/// The cells of t, each standing for the primary cluster a E_ij.
std::vector<Cell> primary_components(const Template& t);

inline constexpr std::uint64_t kDefaultTemplateCap = std::uint64_t{1} << 20;

/// All templates of size n in Template order. Count equals bell_poly(n, q).
/// Throws ResourceLimitError when the count would exceed `cap`.
std::vector<Template> enumerate_templates(int n, const Field& F,
                                          std::uint64_t cap = kDefaultTemplateCap);

/// B(n, q) by B(m+1) = sum_k C(m,k) (q-1)^(m-k) B(k), B(0) = 1.
BigInt bell_poly(int n, long long q);

inline constexpr std::uint64_t kDefaultClusterCap = std::uint64_t{1} << 24;

/// All elements of the coadjoint cluster of t, generated as the union of the
/// left orbits L(rho) = rho + L^(rho) over rho in the right orbit t + R^(t).
/// Sorted in PointCodec order. Throws ResourceLimitError if q^(2d) > cap.
std::vector<Functional> cluster_elements(const Field& F, const Template& t,
                                         std::uint64_t cap = kDefaultClusterCap);

/// All elements of the span of `basis` (q^|basis| points).
std::vector<Functional> span_elements(const Field& F, int n, const std::vector<Functional>& basis);

}  // namespace supercluster
