#pragma once

#include <map>
#include <vector>

#include "supercluster/clusters.hpp"
#include "supercluster/gf.hpp"
#include "supercluster/matrix.hpp"
#include "supercluster/numeric.hpp"
#include "supercluster/template.hpp"

namespace supercluster {

/// True iff supp(lambda) meets every row 1..n-1.
bool in_delta(const Functional& f);

/// (-1)^r (q-1)(q^2-1)...(q^(n-1-r)-1) with r = rank(g - I).
BigInt delta_value(const Field& F, const UniMatrix& g);

/// Rows 1..n-1 holding no support position of t.
std::vector<int> empty_rows(const Template& t);

/// True iff some empty row k has d(k, t) = 0 (block-diagonal split).
bool is_degenerate(const Template& t);

/// q^(d-i) prod_{k empty} (1 - q^-d(k)); zero exactly for degenerate t.
/// Throws InvariantViolation if the value is not a non-negative integer.
BigInt delta_multiplicity(const Field& F, const Template& t);

struct DeltaDecomposition {
  Field field;
  int n = 1;
  std::map<Template, BigInt> terms{};  // non-degenerate templates only
  BigInt identity_value{};           // (q-1)(q^2-1)...(q^(n-1)-1)
};

DeltaDecomposition delta_decompose(int n, const Field& F,
                                   std::uint64_t template_cap = kDefaultTemplateCap);

}  // namespace supercluster
