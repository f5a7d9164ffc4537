#pragma once

#include <string>
#include <vector>

#include "supercluster/clusters.hpp"
#include "supercluster/cyclotomic.hpp"
#include "supercluster/gf.hpp"
#include "supercluster/matrix.hpp"
#include "supercluster/numeric.hpp"
#include "supercluster/template.hpp"

namespace supercluster {

/// theta(x) = zeta_p^Tr(x)
Cyclotomic theta_of(const Field& F, Elem x);

/// v(lambda)(g) = theta(lambda(g - I))
Cyclotomic fourier_value(const Field& F, const Functional& f, const UniMatrix& g);

/// Closed-form value of chi(tau) at I + e(x), both templates:
/// zero if x has a non-zero entry below or to the left of a support position
/// of tau, otherwise q^(d(tau) - #Gamma-hooks) theta(tau(x)).
Cyclotomic char_value_closed(const Field& F, const Template& tau, const Template& x);

/// Number of Gamma-hook corners (a,b): a support position of tau to the right
/// in row a and a non-zero entry of x below in column b.
int gamma_hooks(const Template& tau, const Template& x);

/// q^(i-d) sum_{lambda in cluster(tau)} theta(lambda(g - I)) at any g.
Cyclotomic char_value_sum(const Field& F, const Template& tau, const UniMatrix& g,
                          std::uint64_t cap = kDefaultClusterCap);

/// Same as char_value_sum, reusing precomputed cluster elements.
Cyclotomic char_value_sum(const Field& F, const Template& tau,
                          const std::vector<Functional>& cluster, const UniMatrix& g);

BigInt degree(const Field& F, const Template& tau);
BigInt self_intertwining(const Field& F, const Template& tau);

/// Supercharacter table: rows are coadjoint templates, columns adjoint
/// templates, both in Template order; values[r][c] = chi(rows[r])(I + e(cols[c])).
struct CharacterTable {
  Field field;
  int n = 1;
  std::vector<Template> rows{};
  std::vector<Template> cols{};
  std::vector<std::vector<Cyclotomic>> values{};
  std::vector<BigInt> row_degrees{};
  std::vector<BigInt> row_selfint{};
  std::vector<BigInt> col_sizes{};

  BigInt group_order() const;
  /// Index of the identity column (the empty template).
  std::size_t identity_col() const;
  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

struct TableOptions {
  std::uint64_t template_cap = kDefaultTemplateCap;
  int jobs = 1;
};

/// Throws ResourceLimitError when B(n,q) exceeds the template cap.
CharacterTable build_table(int n, const Field& F, const TableOptions& options = {});

/// (1/|U|) sum_c col_size[c] f[c] conj(h[c]) for class functions given by
/// their values on the table's columns.
Cyclotomic inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& f,
                         const std::vector<Cyclotomic>& h);

struct AxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the supercharacter-theory axioms on a built table: superclass sizes
/// partition U; rows weighted by q^(d-i) sum to the regular character; rows are
/// mutually orthogonal with self-product q^i; |rows| = |cols| = B(n,q); the
/// identity column holds the degrees; rows are linearly independent.
AxiomReport verify_axioms(const CharacterTable& table);

}  // namespace supercluster
