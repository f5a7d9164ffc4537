#include "supercluster/discrete.hpp"

namespace supercluster {
namespace {

BigInt falling_product(long long q, int top) {
  BigInt acc = 1;
  for (int m = 1; m <= top; ++m) acc *= ipow(q, static_cast<unsigned>(m)) - 1;
  return acc;
}

}  // namespace

bool in_delta(const Functional& f) {
  std::vector<bool> hit(f.n() + 1, false);
  for (const Entry& e : f.entries()) hit[e.pos.i] = true;
  for (int k = 1; k < f.n(); ++k) {
    if (!hit[k]) return false;
  }
  return true;
}

BigInt delta_value(const Field& F, const UniMatrix& g) {
  const int r = rank(F, g.off());
  const BigInt magnitude = falling_product(F.q(), g.n() - 1 - r);
  return r % 2 == 0 ? magnitude : BigInt(-magnitude);
}

std::vector<int> empty_rows(const Template& t) {
  std::vector<bool> used(t.n() + 1, false);
  for (const Cell& c : t.cells()) used[c.i] = true;
  std::vector<int> out;
  for (int k = 1; k < t.n(); ++k) {
    if (!used[k]) out.push_back(k);
  }
  return out;
}

bool is_degenerate(const Template& t) {
  const auto inv = invariants_of(t);
  for (int k : empty_rows(t)) {
    if (inv.d_rows[k - 1] == 0) return true;
  }
  return false;
}

BigInt delta_multiplicity(const Field& F, const Template& t) {
  const auto inv = invariants_of(t);
  Rational m = rpow(F.q(), inv.d - inv.i);
  for (int k : empty_rows(t)) m *= Rational(1) - rpow(F.q(), -inv.d_rows[k - 1]);
  if (!is_integer(m) || m < 0) {
    throw InvariantViolation("discrete-series multiplicity of chi(" + format_template(F, t) +
                             ") is " + to_fraction_string(m));
  }
  return boost::multiprecision::numerator(m);
}

DeltaDecomposition delta_decompose(int n, const Field& F, std::uint64_t template_cap) {
  DeltaDecomposition out{F, n};
  out.identity_value = falling_product(F.q(), n - 1);
  BigInt degree_sum = 0;
  for (const Template& t : enumerate_templates(n, F, template_cap)) {
    const BigInt m = delta_multiplicity(F, t);
    if (m == 0) continue;
    out.terms.emplace(t, m);
    degree_sum += m * ipow(F.q(), static_cast<unsigned>(invariants_of(t).d));
  }
  if (degree_sum != out.identity_value) {
    throw InvariantViolation("discrete-series degree identity: sum mult q^d = " + degree_sum.str() +
                             " but (q-1)...(q^(n-1)-1) = " + out.identity_value.str());
  }
  return out;
}

}  // namespace supercluster
