#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "supercluster/characters.hpp"
#include "supercluster/cyclotomic.hpp"
#include "supercluster/discrete.hpp"
#include "supercluster/gf.hpp"
#include "supercluster/matrix.hpp"
#include "supercluster/numeric.hpp"
#include "supercluster/template.hpp"

// Brute-force ground truth at small n, q. Everything here works by explicit
// enumeration of U(n,F_q), u and u*, using only the field, the matrix actions
// and cyclotomic arithmetic. No reduction algorithm or closed formula from the
// fast paths is used, so these results can certify them.
namespace supercluster::oracle {

inline constexpr std::uint64_t kDefaultGroupCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultOrbitCap = std::uint64_t{1} << 20;

struct Caps {
  std::uint64_t group = kDefaultGroupCap;
  std::uint64_t orbit = kDefaultOrbitCap;
};

/// All q^(n(n-1)/2) group elements (dual points) in PointCodec order.
/// Throws ResourceLimitError when q^(n(n-1)/2) > cap.
std::vector<UniMatrix> enumerate_group(int n, const Field& F, std::uint64_t cap = kDefaultGroupCap);
std::vector<Functional> enumerate_dual(int n, const Field& F, std::uint64_t cap = kDefaultGroupCap);

/// Closure under left and right multiplication by every I + a e_ij, a != 0.
std::vector<Functional> bfs_double_orbit(const Field& F, const Functional& start,
                                         std::uint64_t cap = kDefaultOrbitCap);
std::vector<NilMatrix> bfs_double_orbit(const Field& F, const NilMatrix& start,
                                        std::uint64_t cap = kDefaultOrbitCap);
/// Closure under the left action only.
std::vector<Functional> bfs_left_orbit(const Field& F, const Functional& start,
                                       std::uint64_t cap = kDefaultOrbitCap);

/// Partition of a whole point space into double orbits.
struct OrbitDecomposition {
  int n = 1;
  std::uint64_t num_points = 0;
  /// orbit_id[code] for every PointCodec code.
  std::vector<std::uint32_t> orbit_id;
  /// The unique rook placement found in each orbit, indexed by orbit id.
  std::vector<Template> representatives;
  std::vector<std::uint64_t> sizes;
};

/// Throws InvariantViolation if an orbit does not contain exactly one template.
OrbitDecomposition decompose_dual(int n, const Field& F, const Caps& caps = {});
OrbitDecomposition decompose_adjoint(int n, const Field& F, const Caps& caps = {});

/// Fixed-point criterion for g = I + X, X a template: g * lambda = lambda iff
/// supp(lambda) has no position above a non-zero entry of X.
bool fixed_by_template(const Functional& f, const Template& x);

/// chi(tau)(I + e(X)) for each X in cols, as the sum over lambda in the left
/// orbit L(tau) fixed by g of theta(lambda(X)). Fixedness is tested directly.
std::vector<Cyclotomic> brute_char(const Field& F, const Template& tau,
                                   const std::vector<Template>& cols,
                                   std::uint64_t cap = kDefaultOrbitCap);

/// (1/|U|) sum_g f(g) conj(h(g)) over explicit per-element values.
Cyclotomic brute_inner(const Field& F, int n, const std::vector<Cyclotomic>& f,
                       const std::vector<Cyclotomic>& h);

/// Values of a class function on every group element (enumerate_group order),
/// looked up through the adjoint decomposition.
std::vector<Cyclotomic> expand_to_group(const Field& F, const OrbitDecomposition& adjoint,
                                        const std::map<Template, Cyclotomic>& by_template,
                                        std::uint64_t cap = kDefaultGroupCap);

/// The brute-force character table and exact decomposition of class functions.
class BruteTable {
 public:
  BruteTable(int n, const Field& F, const Caps& caps = {});

  int n() const { return n_; }
  const Field& field() const { return field_; }
  /// Coadjoint templates in Template order.
  const std::vector<Template>& rows() const { return rows_; }
  /// Adjoint templates in Template order.
  const std::vector<Template>& cols() const { return cols_; }
  const std::vector<std::vector<Cyclotomic>>& values() const { return values_; }
  const OrbitDecomposition& dual_orbits() const { return dual_; }
  const OrbitDecomposition& adjoint_orbits() const { return adjoint_; }
  std::size_t row_index(const Template& t) const;
  std::size_t col_index(const Template& t) const;

  /// Coefficients c_r with sum_r c_r chi_r = f on the columns, by exact
  /// linear algebra. Throws InvariantViolation if some c_r is not a
  /// non-negative integer.
  std::map<Template, BigInt> decompose(const std::vector<Cyclotomic>& f) const;
  /// Pointwise product of two rows, decomposed.
  std::map<Template, BigInt> tensor(const Template& t1, const Template& t2) const;

 private:
  int n_;
  Field field_;
  OrbitDecomposition dual_;
  OrbitDecomposition adjoint_;
  std::vector<Template> rows_;
  std::vector<Template> cols_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::vector<Cyclotomic>> inverse_;
};

/// The table in CharacterTable form with every entry taken from the oracle:
/// degrees from the identity column, self-intertwining numbers from the
/// element-wise inner product, column sizes from the adjoint orbits.
CharacterTable brute_character_table(const BruteTable& brute);

/// Decomposition of the discrete-series trace, solved against the oracle table.
DeltaDecomposition brute_delta_decomposition(const BruteTable& brute);

/// Trace of g on the span of v(lambda), lambda in Delta: sum over lambda in
/// Delta fixed by g of theta(lambda(g - I)). `delta_points` must be exactly Delta.
Cyclotomic brute_delta_at(const Field& F, const UniMatrix& g,
                          const std::vector<Functional>& delta_points);

/// All lambda whose support meets each of the rows 1..n-1.
std::vector<Functional> delta_points(int n, const Field& F, std::uint64_t cap = kDefaultGroupCap);

/// Number of left orbits in cluster(tau) intersected with Delta.
std::uint64_t left_orbits_in_delta(const Field& F, const Template& tau,
                                   std::uint64_t cap = kDefaultOrbitCap);

/// Sizes of all left orbits of u* (their sum is q^(n(n-1)/2)).
std::vector<std::uint64_t> left_orbit_sizes(int n, const Field& F, const Caps& caps = {});

}  // namespace supercluster::oracle
