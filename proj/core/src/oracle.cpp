#include "supercluster/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace supercluster::oracle {
namespace {

void check_space(const PointCodec& codec, std::uint64_t cap, const char* what) {
  if (codec.size() > cap) {
    throw ResourceLimitError(std::string(what) + ": q^(n(n-1)/2) = " + std::to_string(codec.size()) +
                             " exceeds the cap " + std::to_string(cap));
  }
}

std::vector<UniMatrix> generators(int n, const Field& F) {
  std::vector<UniMatrix> out;
  for (const Position& p : positions_row_major(n)) {
    for (Elem a : F.nonzero()) out.push_back(UniMatrix::elementary(n, p.i, p.j, a));
  }
  return out;
}

// Breadth-first closure of `start` under `step`, which calls visit(next) for
// each neighbour. Returns codes in ascending order.
template <class Point, class Step>
std::vector<std::uint64_t> closure(const PointCodec& codec, const Point& start, std::uint64_t cap,
                                   Step step) {
  std::unordered_set<std::uint64_t> seen{codec.encode(start)};
  std::deque<Point> frontier{start};
  while (!frontier.empty()) {
    const Point cur = std::move(frontier.front());
    frontier.pop_front();
    step(cur, [&](const Point& next) {
      if (seen.insert(codec.encode(next)).second) {
        if (seen.size() > cap) throw ResourceLimitError("orbit exceeds the cap " + std::to_string(cap));
        frontier.push_back(next);
      }
    });
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> double_orbit_codes(const Field& F, const PointCodec& codec,
                                              const Functional& start, std::uint64_t cap) {
  const auto gens = generators(start.n(), F);
  return closure(codec, start, cap, [&](const Functional& f, auto&& visit) {
    for (const UniMatrix& g : gens) {
      visit(coact_left(F, g, f));
      visit(coact_right(F, f, g));
    }
  });
}

std::vector<std::uint64_t> double_orbit_codes(const Field& F, const PointCodec& codec,
                                              const NilMatrix& start, std::uint64_t cap) {
  const auto gens = generators(start.n(), F);
  return closure(codec, start, cap, [&](const NilMatrix& x, auto&& visit) {
    for (const UniMatrix& g : gens) {
      visit(act_left(F, g, x));
      visit(act_right(F, x, g));
    }
  });
}

std::vector<std::uint64_t> left_orbit_codes(const Field& F, const PointCodec& codec,
                                            const Functional& start, std::uint64_t cap) {
  const auto gens = generators(start.n(), F);
  return closure(codec, start, cap, [&](const Functional& f, auto&& visit) {
    for (const UniMatrix& g : gens) visit(coact_left(F, g, f));
  });
}

template <class Point>
OrbitDecomposition decompose(int n, const Field& F, const Caps& caps) {
  const PointCodec codec(F, n);
  check_space(codec, caps.group, "orbit decomposition");
  OrbitDecomposition out;
  out.n = n;
  out.num_points = codec.size();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  out.orbit_id.assign(codec.size(), kUnset);
  for (std::uint64_t code = 0; code < codec.size(); ++code) {
    if (out.orbit_id[code] != kUnset) continue;
    Point start;
    if constexpr (std::is_same_v<Point, Functional>) {
      start = codec.decode_functional(code);
    } else {
      start = codec.decode_matrix(code);
    }
    const auto orbit = double_orbit_codes(F, codec, start, caps.orbit);
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    std::vector<Template> rooks;
    for (std::uint64_t c : orbit) {
      out.orbit_id[c] = id;
      const Functional f = codec.decode_functional(c);
      if (is_rook_placement(f.support())) rooks.push_back(Template::from_functional(f));
    }
    if (rooks.size() != 1) {
      throw InvariantViolation("double orbit of size " + std::to_string(orbit.size()) + " contains " +
                               std::to_string(rooks.size()) + " templates (expected exactly one)");
    }
    out.representatives.push_back(rooks.front());
    out.sizes.push_back(orbit.size());
  }
  return out;
}

bool support_meets_rows(const Functional& f) {
  std::vector<bool> hit(f.n() + 1, false);
  for (const Entry& e : f.entries()) hit[e.pos.i] = true;
  for (int k = 1; k < f.n(); ++k) {
    if (!hit[k]) return false;
  }
  return true;
}

}  // namespace

std::vector<UniMatrix> enumerate_group(int n, const Field& F, std::uint64_t cap) {
  const PointCodec codec(F, n);
  check_space(codec, cap, "enumerate_group");
  std::vector<UniMatrix> out;
  out.reserve(codec.size());
  for (std::uint64_t c = 0; c < codec.size(); ++c) out.emplace_back(codec.decode_matrix(c));
  return out;
}

std::vector<Functional> enumerate_dual(int n, const Field& F, std::uint64_t cap) {
  const PointCodec codec(F, n);
  check_space(codec, cap, "enumerate_dual");
  std::vector<Functional> out;
  out.reserve(codec.size());
  for (std::uint64_t c = 0; c < codec.size(); ++c) out.push_back(codec.decode_functional(c));
  return out;
}

std::vector<Functional> bfs_double_orbit(const Field& F, const Functional& start, std::uint64_t cap) {
  const PointCodec codec(F, start.n());
  std::vector<Functional> out;
  for (std::uint64_t c : double_orbit_codes(F, codec, start, cap)) out.push_back(codec.decode_functional(c));
  return out;
}

std::vector<NilMatrix> bfs_double_orbit(const Field& F, const NilMatrix& start, std::uint64_t cap) {
  const PointCodec codec(F, start.n());
  std::vector<NilMatrix> out;
  for (std::uint64_t c : double_orbit_codes(F, codec, start, cap)) out.push_back(codec.decode_matrix(c));
  return out;
}

std::vector<Functional> bfs_left_orbit(const Field& F, const Functional& start, std::uint64_t cap) {
  const PointCodec codec(F, start.n());
  std::vector<Functional> out;
  for (std::uint64_t c : left_orbit_codes(F, codec, start, cap)) out.push_back(codec.decode_functional(c));
  return out;
}

OrbitDecomposition decompose_dual(int n, const Field& F, const Caps& caps) {
  return decompose<Functional>(n, F, caps);
}

OrbitDecomposition decompose_adjoint(int n, const Field& F, const Caps& caps) {
  return decompose<NilMatrix>(n, F, caps);
}

bool fixed_by_template(const Functional& f, const Template& x) {
  for (const Entry& e : f.entries()) {
    for (const Cell& c : x.cells()) {
      if (e.pos.j == c.j && e.pos.i < c.i) return false;
    }
  }
  return true;
}

std::vector<Cyclotomic> brute_char(const Field& F, const Template& tau,
                                   const std::vector<Template>& cols, std::uint64_t cap) {
  const auto orbit = bfs_left_orbit(F, tau.functional(), cap);
  std::vector<Cyclotomic> out;
  out.reserve(cols.size());
  for (const Template& col : cols) {
    const NilMatrix x = col.matrix();
    const UniMatrix g(x);
    ZetaHistogram sum(F.p());
    for (const Functional& f : orbit) {
      if (coact_left(F, g, f) == f) sum.add(F.trace(eval(F, f, x)));
    }
    out.push_back(sum.value());
  }
  return out;
}

Cyclotomic brute_inner(const Field& F, int n, const std::vector<Cyclotomic>& f,
                       const std::vector<Cyclotomic>& h) {
  const BigInt order = ipow(F.q(), static_cast<unsigned>(num_positions(n)));
  if (BigInt(f.size()) != order || BigInt(h.size()) != order) {
    throw ArgumentError("brute_inner: need one value per group element");
  }
  Cyclotomic acc(F.p());
  for (std::size_t k = 0; k < f.size(); ++k) acc += f[k] * h[k].conj();
  return acc * Rational(BigInt(1), order);
}

std::vector<Cyclotomic> expand_to_group(const Field& F, const OrbitDecomposition& adjoint,
                                        const std::map<Template, Cyclotomic>& by_template,
                                        std::uint64_t cap) {
  const PointCodec codec(F, adjoint.n);
  check_space(codec, cap, "expand_to_group");
  std::vector<Cyclotomic> out;
  out.reserve(codec.size());
  for (std::uint64_t c = 0; c < codec.size(); ++c) {
    const Template& rep = adjoint.representatives[adjoint.orbit_id[c]];
    auto it = by_template.find(rep);
    if (it == by_template.end()) throw ArgumentError("expand_to_group: missing value for a superclass");
    out.push_back(it->second);
  }
  return out;
}

BruteTable::BruteTable(int n, const Field& F, const Caps& caps)
    : n_(n), field_(F), dual_(decompose_dual(n, F, caps)), adjoint_(decompose_adjoint(n, F, caps)) {
  rows_ = dual_.representatives;
  cols_ = adjoint_.representatives;
  std::sort(rows_.begin(), rows_.end());
  std::sort(cols_.begin(), cols_.end());
  if (rows_.size() != cols_.size()) {
    throw InvariantViolation("number of coadjoint clusters (" + std::to_string(rows_.size()) +
                             ") differs from number of adjoint clusters (" +
                             std::to_string(cols_.size()) + ")");
  }
  for (const Template& t : rows_) values_.push_back(brute_char(F, t, cols_, caps.orbit));
  try {
    inverse_ = inverse(values_);
  } catch (const DomainError&) {
    throw InvariantViolation("brute character table is singular");
  }
}

std::size_t BruteTable::row_index(const Template& t) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), t);
  if (it == rows_.end() || *it != t) throw ArgumentError("not a coadjoint template of this table");
  return static_cast<std::size_t>(it - rows_.begin());
}

std::size_t BruteTable::col_index(const Template& t) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), t);
  if (it == cols_.end() || *it != t) throw ArgumentError("not an adjoint template of this table");
  return static_cast<std::size_t>(it - cols_.begin());
}

std::map<Template, BigInt> BruteTable::decompose(const std::vector<Cyclotomic>& f) const {
  if (f.size() != cols_.size()) throw ArgumentError("decompose: need one value per column");
  std::map<Template, BigInt> out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Cyclotomic m(field_.p());
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!f[c].is_zero()) m += f[c] * inverse_[c][r];
    }
    if (!m.is_rational() || !is_integer(m.rational()) || m.rational() < 0) {
      throw InvariantViolation("coefficient of chi(" + format_template(field_, rows_[r]) + ") is " +
                               m.to_poly_string() + ", not a non-negative integer");
    }
    const BigInt v = boost::multiprecision::numerator(m.rational());
    if (v != 0) out.emplace(rows_[r], v);
  }
  return out;
}

std::map<Template, BigInt> BruteTable::tensor(const Template& t1, const Template& t2) const {
  const auto& a = values_[row_index(t1)];
  const auto& b = values_[row_index(t2)];
  std::vector<Cyclotomic> prod;
  prod.reserve(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) prod.push_back(a[c] * b[c]);
  return decompose(prod);
}

Cyclotomic brute_delta_at(const Field& F, const UniMatrix& g,
                          const std::vector<Functional>& delta_points) {
  ZetaHistogram sum(F.p());
  for (const Functional& f : delta_points) {
    if (coact_left(F, g, f) == f) sum.add(F.trace(eval(F, f, g.off())));
  }
  return sum.value();
}

std::vector<Functional> delta_points(int n, const Field& F, std::uint64_t cap) {
  std::vector<Functional> out;
  for (Functional& f : enumerate_dual(n, F, cap)) {
    if (support_meets_rows(f)) out.push_back(std::move(f));
  }
  return out;
}

std::uint64_t left_orbits_in_delta(const Field& F, const Template& tau, std::uint64_t cap) {
  const PointCodec codec(F, tau.n());
  std::unordered_set<std::uint64_t> remaining;
  for (std::uint64_t c : double_orbit_codes(F, codec, tau.functional(), cap)) {
    if (support_meets_rows(codec.decode_functional(c))) remaining.insert(c);
  }
  std::uint64_t orbits = 0;
  while (!remaining.empty()) {
    const std::uint64_t start = *std::min_element(remaining.begin(), remaining.end());
    for (std::uint64_t c : left_orbit_codes(F, codec, codec.decode_functional(start), cap)) {
      if (remaining.erase(c) == 0) {
        throw InvariantViolation("left orbit leaves the discrete-series set");
      }
    }
    ++orbits;
  }
  return orbits;
}

std::vector<std::uint64_t> left_orbit_sizes(int n, const Field& F, const Caps& caps) {
  const PointCodec codec(F, n);
  check_space(codec, caps.group, "left_orbit_sizes");
  std::vector<bool> seen(codec.size(), false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t code = 0; code < codec.size(); ++code) {
    if (seen[code]) continue;
    const auto orbit = left_orbit_codes(F, codec, codec.decode_functional(code), caps.orbit);
    for (std::uint64_t c : orbit) seen[c] = true;
    out.push_back(orbit.size());
  }
  return out;
}

CharacterTable brute_character_table(const BruteTable& brute) {
  const Field& F = brute.field();
  const int n = brute.n();
  CharacterTable t{F, n};
  t.rows = brute.rows();
  t.cols = brute.cols();
  t.values = brute.values();
  const std::size_t id = brute.col_index(Template(n));
  const auto& adj = brute.adjoint_orbits();
  t.col_sizes.assign(t.cols.size(), 0);
  for (std::size_t o = 0; o < adj.representatives.size(); ++o) {
    t.col_sizes[brute.col_index(adj.representatives[o])] = adj.sizes[o];
  }
  std::map<Template, std::size_t> col_of;
  for (std::size_t c = 0; c < t.cols.size(); ++c) col_of.emplace(t.cols[c], c);
  for (const auto& row : t.values) {
    const Cyclotomic& deg = row[id];
    if (!deg.is_rational() || !is_integer(deg.rational())) {
      throw InvariantViolation("oracle degree is not an integer: " + deg.to_poly_string());
    }
    t.row_degrees.push_back(boost::multiprecision::numerator(deg.rational()));
    std::map<Template, Cyclotomic> by_col;
    for (std::size_t c = 0; c < t.cols.size(); ++c) by_col.emplace(t.cols[c], row[c]);
    const auto full = expand_to_group(F, adj, by_col);
    const Cyclotomic ip = brute_inner(F, n, full, full);
    if (!ip.is_rational() || !is_integer(ip.rational())) {
      throw InvariantViolation("oracle self inner product is not an integer: " + ip.to_poly_string());
    }
    t.row_selfint.push_back(boost::multiprecision::numerator(ip.rational()));
  }
  return t;
}

DeltaDecomposition brute_delta_decomposition(const BruteTable& brute) {
  const Field& F = brute.field();
  const int n = brute.n();
  const auto delta = delta_points(n, F);
  std::vector<Cyclotomic> values;
  for (const Template& x : brute.cols()) values.push_back(brute_delta_at(F, UniMatrix(x.matrix()), delta));
  DeltaDecomposition out{F, n};
  out.terms = brute.decompose(values);
  const Cyclotomic& at_identity = values[brute.col_index(Template(n))];
  out.identity_value = boost::multiprecision::numerator(at_identity.rational());
  return out;
}

}  // namespace supercluster::oracle
