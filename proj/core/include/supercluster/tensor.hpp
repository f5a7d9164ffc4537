#pragma once

#include <map>
#include <vector>

#include "supercluster/clusters.hpp"
#include "supercluster/gf.hpp"
#include "supercluster/numeric.hpp"
#include "supercluster/template.hpp"

namespace supercluster {

/// Non-negative integer combination of cluster characters, keyed by
/// coadjoint template.
class CharSum {
 public:
  CharSum(const Field& F, int n) : field_(F), n_(n) {}

  const Field& field() const { return field_; }
  int n() const { return n_; }
  const std::map<Template, BigInt>& terms() const { return terms_; }
  BigInt multiplicity(const Template& t) const;

  /// Adds mult copies of chi(t); mult must be non-negative.
  void add(const Template& t, const BigInt& mult = 1);
  void add(const CharSum& other, const BigInt& scale = 1);

  /// sum mult q^d(t)
  BigInt total_degree() const;

  friend bool operator==(const CharSum& a, const CharSum& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  int n_;
  std::map<Template, BigInt> terms_;
};

/// A primary factor chi(i, j, a) = chi(a eps_ij); a = 0 is the trivial character.
struct PrimaryFactor {
  int i;
  int j;
  Elem a;

  friend bool operator==(const PrimaryFactor&, const PrimaryFactor&) = default;
  friend auto operator<=>(const PrimaryFactor&, const PrimaryFactor&) = default;
};

/// Which of the two equal expansions to use when both factors sit on the
/// same cell with a + b != 0.
enum class SameCellExpansion { kColumn, kRow };

/// Tensor product of primary characters by repeated rewriting: disjoint
/// factors merge into one template, second-diagonal factors are absorbed,
/// and any remaining row/column collision is expanded and recursed on.
CharSum tensor_rewrite(const Field& F, int n, const std::vector<PrimaryFactor>& factors,
                       SameCellExpansion mode = SameCellExpansion::kColumn);

/// chi(i,j,a) (x) chi(i2,j2,b) by the pairwise case split.
CharSum primary_product(const Field& F, int n, PrimaryFactor first, PrimaryFactor second,
                        SameCellExpansion mode = SameCellExpansion::kColumn);

/// chi(t1) (x) chi(t2) through the primary factorization of both templates.
CharSum tensor_templates(const Field& F, const Template& t1, const Template& t2,
                         SameCellExpansion mode = SameCellExpansion::kColumn);

inline constexpr std::uint64_t kDefaultPairCap = std::uint64_t{1} << 24;

/// For every template t: #{(l1, l2) in cluster(t1) x cluster(t2) : l1 + l2 in cluster(t)}.
/// Throws ResourceLimitError if |cluster(t1)| |cluster(t2)| exceeds `cap`.
std::map<Template, BigInt> pair_sum_counts(const Field& F, const Template& t1, const Template& t2,
                                           std::uint64_t cap = kDefaultPairCap);

BigInt c_count(const Field& F, const Template& t1, const Template& t2, const Template& t,
               std::uint64_t cap = kDefaultPairCap);

/// chi(t1) (x) chi(t2) from the pair counts: the multiplicity of chi(t) is
/// q^(i1 + i2 - d1 - d2 - d) C(t1, t2, t). Throws InvariantViolation if a
/// coefficient is not a non-negative integer.
CharSum tensor_by_counting(const Field& F, const Template& t1, const Template& t2,
                           std::uint64_t cap = kDefaultPairCap);

}  // namespace supercluster
