#include "supercluster/characters.hpp"

#include "supercluster/parallel.hpp"

namespace supercluster {

Cyclotomic theta_of(const Field& F, Elem x) { return Cyclotomic::zeta_power(F.p(), F.trace(x)); }

Cyclotomic fourier_value(const Field& F, const Functional& f, const UniMatrix& g) {
  return theta_of(F, eval(F, f, g.off()));
}

int gamma_hooks(const Template& tau, const Template& x) {
  int hooks = 0;
  for (const Cell& s : tau.cells()) {
    for (const Cell& e : x.cells()) {
      // corner (s.i, e.j): support to the right (s.j > e.j), entry below (e.i > s.i)
      if (e.j < s.j && e.i > s.i) ++hooks;
    }
  }
  return hooks;
}

Cyclotomic char_value_closed(const Field& F, const Template& tau, const Template& x) {
  if (tau.n() != x.n()) throw ArgumentError("char_value_closed: size mismatch");
  for (const Cell& s : tau.cells()) {
    for (const Cell& e : x.cells()) {
      const bool below = e.j == s.j && e.i > s.i;
      const bool left = e.i == s.i && e.j < s.j;
      if (below || left) return Cyclotomic(F.p());
    }
  }
  const int exponent = invariants_of(tau).d - gamma_hooks(tau, x);
  return theta_of(F, eval(F, tau.functional(), x.matrix())) *
         Rational(ipow(F.q(), static_cast<unsigned>(exponent)));
}

Cyclotomic char_value_sum(const Field& F, const Template& tau,
                          const std::vector<Functional>& cluster, const UniMatrix& g) {
  ZetaHistogram sum(F.p());
  for (const Functional& f : cluster) sum.add(F.trace(eval(F, f, g.off())));
  const auto inv = invariants_of(tau);
  return sum.value() * rpow(F.q(), inv.i - inv.d);
}

Cyclotomic char_value_sum(const Field& F, const Template& tau, const UniMatrix& g,
                          std::uint64_t cap) {
  if (tau.n() != g.n()) throw ArgumentError("char_value_sum: size mismatch");
  return char_value_sum(F, tau, cluster_elements(F, tau, cap), g);
}

BigInt degree(const Field& F, const Template& tau) {
  return ipow(F.q(), static_cast<unsigned>(invariants_of(tau).d));
}

BigInt self_intertwining(const Field& F, const Template& tau) {
  return ipow(F.q(), static_cast<unsigned>(invariants_of(tau).i));
}

BigInt CharacterTable::group_order() const {
  return ipow(field.q(), static_cast<unsigned>(num_positions(n)));
}

std::size_t CharacterTable::identity_col() const {
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].empty()) return c;
  }
  throw InternalError("character table has no identity column");
}

CharacterTable build_table(int n, const Field& F, const TableOptions& options) {
  CharacterTable t{F, n};
  t.rows = enumerate_templates(n, F, options.template_cap);
  t.cols = t.rows;
  const std::size_t b = t.rows.size();
  t.values.assign(b, std::vector<Cyclotomic>(b, Cyclotomic(F.p())));
  t.row_degrees.resize(b);
  t.row_selfint.resize(b);
  t.col_sizes.resize(b);
  parallel_for(b, options.jobs, [&](std::size_t r) {
    for (std::size_t c = 0; c < b; ++c) t.values[r][c] = char_value_closed(F, t.rows[r], t.cols[c]);
    t.row_degrees[r] = degree(F, t.rows[r]);
    t.row_selfint[r] = self_intertwining(F, t.rows[r]);
    t.col_sizes[r] = adjoint_cluster_size(F, t.cols[r]);
  });
  return t;
}

Cyclotomic inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& f,
                         const std::vector<Cyclotomic>& h) {
  if (f.size() != table.cols.size() || h.size() != table.cols.size()) {
    throw ArgumentError("inner_product: class functions must have one value per column");
  }
  Cyclotomic acc(table.field.p());
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c].is_zero() || h[c].is_zero()) continue;
    acc += (f[c] * h[c].conj()) * Rational(table.col_sizes[c]);
  }
  return acc * Rational(BigInt(1), table.group_order());
}

AxiomReport verify_axioms(const CharacterTable& table) {
  AxiomReport report;
  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };
  const Field& F = table.field;
  const int p = F.p();
  const std::size_t b = table.rows.size();

  const BigInt expected_count = bell_poly(table.n, F.q());
  if (b != table.cols.size()) fail("|rows| != |cols|");
  if (BigInt(b) != expected_count) fail("|rows| != B(n,q) = " + expected_count.str());

  BigInt total = 0;
  for (const auto& s : table.col_sizes) total += s;
  if (total != table.group_order()) {
    fail("superclass sizes sum to " + total.str() + ", expected |U| = " + table.group_order().str());
  }

  const std::size_t id = table.identity_col();
  for (std::size_t r = 0; r < b; ++r) {
    if (table.values[r][id] != Cyclotomic(p, Rational(table.row_degrees[r]))) {
      fail("row " + format_template(F, table.rows[r]) + ": value at identity differs from degree");
    }
    if (table.row_degrees[r] % table.row_selfint[r] != 0) {
      fail("row " + format_template(F, table.rows[r]) + ": q^(d-i) is not integral");
    }
  }

  // Regular character: sum_r q^(d-i) chi_r = |U| at identity, 0 elsewhere.
  for (std::size_t c = 0; c < table.cols.size(); ++c) {
    Cyclotomic acc(p);
    for (std::size_t r = 0; r < b; ++r) {
      acc += table.values[r][c] * Rational(table.row_degrees[r] / table.row_selfint[r]);
    }
    const Cyclotomic expected(p, c == id ? Rational(table.group_order()) : Rational(0));
    if (acc != expected) {
      fail("regular character at column " + format_template(F, table.cols[c]) + " is " +
           acc.to_poly_string() + ", expected " + expected.to_poly_string());
    }
  }

  for (std::size_t r = 0; r < b; ++r) {
    for (std::size_t s = r; s < b; ++s) {
      const Cyclotomic ip = inner_product(table, table.values[r], table.values[s]);
      const Cyclotomic expected(p, r == s ? Rational(table.row_selfint[r]) : Rational(0));
      if (ip != expected) {
        fail("<chi(" + format_template(F, table.rows[r]) + "), chi(" +
             format_template(F, table.rows[s]) + ")> = " + ip.to_poly_string() + ", expected " +
             expected.to_poly_string());
      }
    }
  }

  if (rank(table.values) != static_cast<int>(b)) fail("table rows are linearly dependent");
  return report;
}

}  // namespace supercluster
