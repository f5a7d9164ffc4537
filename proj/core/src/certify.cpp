#include "supercluster/certify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "supercluster/characters.hpp"
#include "supercluster/clusters.hpp"
#include "supercluster/discrete.hpp"
#include "supercluster/parallel.hpp"
#include "supercluster/tensor.hpp"

namespace supercluster {
namespace {

const std::map<std::string, std::string>& titles() {
  static const std::map<std::string, std::string> t{
      {"Thm4.1", "every cluster holds exactly one template (both sides)"},
      {"Thm3.5", "character values as Fourier sums over the cluster"},
      {"Thm6.2", "cluster sizes q^(2d-i) and adjoint sizes"},
      {"Thm7.1", "cluster characters factor into primary characters"},
      {"Thm8.6", "tensor products decompose with non-negative integer multiplicities"},
      {"Thm9.1", "discrete-series value from rank(g - I)"},
      {"Thm9.3", "discrete-series multiplicities"},
      {"A.1", "closed-form character values"},
      {"A.2", "supercharacter theory axioms"},
  };
  return t;
}

// Per-slot failure buffers so parallel loops report in index order.
class Failures {
 public:
  explicit Failures(std::size_t slots) : slots_(slots) {}
  void add(std::size_t slot, std::string msg) { slots_[slot].push_back(std::move(msg)); }
  void drain(CheckResult& out) {
    for (auto& s : slots_) {
      for (auto& m : s) out.failures.push_back(std::move(m));
    }
  }

 private:
  std::vector<std::vector<std::string>> slots_;
};

class Certifier {
 public:
  Certifier(int n, const Field& F, const CertifyOptions& opt)
      : n_(n), F_(F), opt_(opt), codec_(F, n) {}

  CertifyReport run() {
    CertifyReport report;
    report.n = n_;
    report.q = F_.q();
    // Shared ground truth and fast-path table; failures here are fatal for
    // every key, so they propagate.
    templates_ = enumerate_templates(n_, F_);
    brute_.emplace(n_, F_, opt_.caps);
    TableOptions topt;
    topt.jobs = opt_.jobs;
    table_ = build_table(n_, F_, topt);

    const std::vector<std::pair<std::string, void (Certifier::*)(CheckResult&)>> steps{
        {"Thm4.1", &Certifier::classification}, {"Thm3.5", &Certifier::fourier_sums},
        {"Thm6.2", &Certifier::sizes},          {"Thm7.1", &Certifier::factorization},
        {"Thm8.6", &Certifier::tensor},         {"Thm9.1", &Certifier::delta_values},
        {"Thm9.3", &Certifier::delta_multiplicities}, {"A.1", &Certifier::closed_form},
        {"A.2", &Certifier::axioms},
    };
    for (const auto& [key, fn] : steps) {
      CheckResult r;
      r.key = key;
      r.title = titles().at(key);
      try {
        (this->*fn)(r);
      } catch (const ResourceLimitError&) {
        throw;
      } catch (const std::exception& e) {
        r.failures.push_back(std::string("exception: ") + e.what());
      }
      report.checks.push_back(std::move(r));
    }
    return report;
  }

 private:
  const oracle::BruteTable& brute() const { return *brute_; }
  std::string fmt(const Template& t) const { return format_template(F_, t); }

  bool same_order(CheckResult& r) const {
    if (brute().rows() == templates_ && brute().cols() == templates_ && table_.rows == templates_) {
      return true;
    }
    r.failures.push_back("template orders differ between enumeration, oracle and table");
    return false;
  }

  void classification(CheckResult& r) {
    const BigInt b = bell_poly(n_, F_.q());
    if (BigInt(templates_.size()) != b) {
      r.failures.push_back("enumerate_templates gives " + std::to_string(templates_.size()) +
                           " templates, B(n,q) = " + b.str());
    }
    if (brute().rows() != templates_) {
      r.failures.push_back("coadjoint orbit representatives differ from the enumerated templates");
    }
    if (brute().cols() != templates_) {
      r.failures.push_back("adjoint orbit representatives differ from the enumerated templates");
    }
    const auto& dual = brute().dual_orbits();
    const auto& adj = brute().adjoint_orbits();
    const std::size_t points = codec_.size();
    Failures fails(points);
    parallel_for(points, opt_.jobs, [&](std::size_t code) {
      const Functional f = codec_.decode_functional(code);
      const Template fast = coadjoint_template_of(F_, f).tmpl;
      const Template& slow = dual.representatives[dual.orbit_id[code]];
      if (fast != slow) {
        fails.add(code, "coadjoint point code " + std::to_string(code) + ": classifier gives " +
                            fmt(fast) + ", orbit template " + fmt(slow));
      }
      const NilMatrix x = codec_.decode_matrix(code);
      const Template afast = adjoint_template_of(F_, x).tmpl;
      const Template& aslow = adj.representatives[adj.orbit_id[code]];
      if (afast != aslow) {
        fails.add(code, "adjoint point code " + std::to_string(code) + ": classifier gives " +
                            fmt(afast) + ", orbit template " + fmt(aslow));
      }
    });
    fails.drain(r);
    r.cases = 2 * points;
  }

  void fourier_sums(CheckResult& r) {
    if (!same_order(r)) return;
    const std::size_t b = templates_.size();
    const auto& adj = brute().adjoint_orbits();
    // A few extra members of each conjugacy cluster: values must not change.
    std::vector<std::vector<std::uint64_t>> extra(b);
    {
      std::vector<std::vector<std::uint64_t>> members(adj.sizes.size());
      for (std::uint64_t c = 0; c < codec_.size(); ++c) members[adj.orbit_id[c]].push_back(c);
      for (std::size_t o = 0; o < members.size(); ++o) {
        const std::size_t col = brute().col_index(adj.representatives[o]);
        const auto& m = members[o];
        for (std::size_t pick : {std::size_t{0}, m.size() / 2, m.size() - 1}) extra[col].push_back(m[pick]);
      }
    }
    Failures fails(b);
    parallel_for(b, opt_.jobs, [&](std::size_t row) {
      const Template& tau = templates_[row];
      const auto cluster = cluster_elements(F_, tau, opt_.caps.orbit);
      for (std::size_t col = 0; col < b; ++col) {
        const Cyclotomic expect = brute().values()[row][col];
        const Cyclotomic got = char_value_sum(F_, tau, cluster, UniMatrix(templates_[col].matrix()));
        if (got != expect) {
          fails.add(row, "chi(" + fmt(tau) + ") at I+" + fmt(templates_[col]) + ": sum " +
                             got.to_poly_string() + ", oracle " + expect.to_poly_string());
        }
        for (std::uint64_t code : extra[col]) {
          const Cyclotomic other = char_value_sum(F_, tau, cluster, UniMatrix(codec_.decode_matrix(code)));
          if (other != expect) {
            fails.add(row, "chi(" + fmt(tau) + ") not constant on the superclass of " +
                               fmt(templates_[col]) + " (point code " + std::to_string(code) + ")");
          }
        }
      }
    });
    fails.drain(r);
    r.cases = b * b * 4;

    // Fixed points of I + X, X a template: the support criterion against
    // the direct action, when the space is small enough.
    if (codec_.size() * b <= (std::uint64_t{1} << 20)) {
      std::size_t bad = 0;
      for (std::uint64_t code = 0; code < codec_.size(); ++code) {
        const Functional f = codec_.decode_functional(code);
        for (const Template& x : templates_) {
          const bool direct = coact_left(F_, UniMatrix(x.matrix()), f) == f;
          if (direct != oracle::fixed_by_template(f, x)) ++bad;
        }
      }
      if (bad != 0) {
        r.failures.push_back(std::to_string(bad) + " (lambda, X) pairs where the support fixed-point "
                             "criterion disagrees with the direct action");
      }
      r.cases += codec_.size() * b;
    } else {
      r.notes.push_back("fixed-point criterion check skipped (space too large)");
    }
  }

  void sizes(CheckResult& r) {
    const auto& dual = brute().dual_orbits();
    const auto& adj = brute().adjoint_orbits();
    const BigInt order = ipow(F_.q(), static_cast<unsigned>(num_positions(n_)));
    BigInt total = 0;
    for (const Template& t : templates_) total += cluster_size(F_, t);
    if (total != order) {
      r.failures.push_back("sum of q^(2d-i) is " + total.str() + ", expected " + order.str());
    }
    std::vector<std::vector<std::uint64_t>> members(dual.sizes.size());
    for (std::uint64_t c = 0; c < codec_.size(); ++c) members[dual.orbit_id[c]].push_back(c);
    Failures fails(members.size());
    parallel_for(members.size(), opt_.jobs, [&](std::size_t o) {
      const Template& t = dual.representatives[o];
      if (BigInt(dual.sizes[o]) != cluster_size(F_, t)) {
        fails.add(o, "coadjoint cluster of " + fmt(t) + " has " + std::to_string(dual.sizes[o]) +
                         " points, q^(2d-i) = " + cluster_size(F_, t).str());
      }
      std::vector<std::uint64_t> generated;
      for (const Functional& f : cluster_elements(F_, t, opt_.caps.orbit)) generated.push_back(codec_.encode(f));
      if (generated != members[o]) {
        fails.add(o, "structural cluster of " + fmt(t) + " differs from its orbit");
      }
    });
    fails.drain(r);
    for (std::size_t o = 0; o < adj.sizes.size(); ++o) {
      const Template& x = adj.representatives[o];
      if (BigInt(adj.sizes[o]) != adjoint_cluster_size(F_, x)) {
        r.failures.push_back("adjoint cluster of " + fmt(x) + " has " + std::to_string(adj.sizes[o]) +
                             " points, formula gives " + adjoint_cluster_size(F_, x).str());
      }
    }
    std::uint64_t left_total = 0;
    for (std::uint64_t s : oracle::left_orbit_sizes(n_, F_, opt_.caps)) left_total += s;
    if (BigInt(left_total) != order) {
      r.failures.push_back("left orbits cover " + std::to_string(left_total) + " points");
    }
    r.cases = dual.sizes.size() + adj.sizes.size() + 2;
  }

  void factorization(CheckResult& r) {
    if (!same_order(r)) return;
    const std::size_t b = templates_.size();
    for (std::size_t row = 0; row < b; ++row) {
      const Template& tau = templates_[row];
      std::vector<Cyclotomic> prod(b, Cyclotomic(F_.p(), Rational(1)));
      for (const Cell& c : primary_components(tau)) {
        const auto& factor = brute().values()[brute().row_index(Template(n_, {c}))];
        for (std::size_t col = 0; col < b; ++col) prod[col] = prod[col] * factor[col];
      }
      if (prod != brute().values()[row]) {
        r.failures.push_back("chi(" + fmt(tau) + ") is not the product of its primary characters");
      }
      const BigInt deg = degree(F_, tau);
      BigInt deg_prod = 1;
      for (const Cell& c : primary_components(tau)) deg_prod *= degree(F_, Template(n_, {c}));
      if (deg != deg_prod) {
        r.failures.push_back("degree of chi(" + fmt(tau) + ") is not the product of primary degrees");
      }
    }
    r.cases = b;
  }

  std::vector<std::pair<std::size_t, std::size_t>> tensor_pairs(CheckResult& r) const {
    const std::size_t b = templates_.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (b * (b + 1) / 2 <= opt_.exhaustive_pairs) {
      for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = x; y < b; ++y) pairs.emplace_back(x, y);
      }
      r.notes.push_back("all " + std::to_string(pairs.size()) + " unordered pairs");
      return pairs;
    }
    std::mt19937_64 rng(opt_.seed);
    std::uniform_int_distribution<std::size_t> pick(0, b - 1);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const std::size_t want = std::min(opt_.sampled_pairs, b * (b + 1) / 2);
    while (seen.size() < want) {
      std::size_t x = pick(rng);
      std::size_t y = pick(rng);
      if (x > y) std::swap(x, y);
      seen.emplace(x, y);
    }
    pairs.assign(seen.begin(), seen.end());
    r.notes.push_back(std::to_string(pairs.size()) + " sampled pairs, seed " + std::to_string(opt_.seed));
    return pairs;
  }

  void tensor(CheckResult& r) {
    if (!same_order(r)) return;
    const auto pairs = tensor_pairs(r);
    std::vector<char> counted(pairs.size(), 0);
    Failures fails(pairs.size());
    parallel_for(pairs.size(), opt_.jobs, [&](std::size_t k) {
      const Template& t1 = templates_[pairs[k].first];
      const Template& t2 = templates_[pairs[k].second];
      const std::string what = "chi(" + fmt(t1) + ") x chi(" + fmt(t2) + ")";
      try {
        const CharSum rewrite = tensor_templates(F_, t1, t2);
        const auto brute_terms = brute().tensor(t1, t2);
        if (rewrite.terms() != brute_terms) fails.add(k, what + ": rewrite differs from brute decomposition");
        if (rewrite.total_degree() != degree(F_, t1) * degree(F_, t2)) {
          fails.add(k, what + ": total degree " + rewrite.total_degree().str() + " not conserved");
        }
        if (tensor_templates(F_, t2, t1) != rewrite) fails.add(k, what + ": product not commutative");
        if (tensor_templates(F_, t1, t2, SameCellExpansion::kRow) != rewrite) {
          fails.add(k, what + ": row and column same-cell expansions differ");
        }
        if (cluster_size(F_, t1) * cluster_size(F_, t2) <= opt_.counting_budget) {
          counted[k] = 1;
          if (tensor_by_counting(F_, t1, t2, opt_.counting_budget) != rewrite) {
            fails.add(k, what + ": counting path differs from rewrite");
          }
        }
        // Trivial constituent appears only against the dual cluster.
        const Template neg = coadjoint_template_of(F_, fun_scale(F_, F_.neg(F_.one()), t1.functional())).tmpl;
        const BigInt expect = neg == t2 ? self_intertwining(F_, t1) : BigInt(0);
        if (rewrite.multiplicity(Template(n_)) != expect) {
          fails.add(k, what + ": trivial multiplicity " + rewrite.multiplicity(Template(n_)).str() +
                           ", expected " + expect.str());
        }
      } catch (const ResourceLimitError&) {
        throw;
      } catch (const std::exception& e) {
        fails.add(k, what + ": " + e.what());
      }
    });
    fails.drain(r);
    const auto ncounted = std::count(counted.begin(), counted.end(), 1);
    if (static_cast<std::size_t>(ncounted) != pairs.size()) {
      r.notes.push_back(std::to_string(pairs.size() - ncounted) +
                        " pairs above the counting budget checked by rewrite and brute force only");
    }
    r.cases = pairs.size();
  }

  void delta_values(CheckResult& r) {
    const auto delta = oracle::delta_points(n_, F_, opt_.caps.group);
    for (const Functional& f : delta) {
      if (!in_delta(f)) r.failures.push_back("oracle and fast Delta membership disagree");
    }
    const std::size_t points = codec_.size();
    Failures fails(points);
    parallel_for(points, opt_.jobs, [&](std::size_t code) {
      const UniMatrix g(codec_.decode_matrix(code));
      const BigInt fast = delta_value(F_, g);
      const Cyclotomic slow = oracle::brute_delta_at(F_, g, delta);
      if (slow != Cyclotomic(F_.p(), Rational(fast))) {
        fails.add(code, "delta at point code " + std::to_string(code) + ": rank formula " + fast.str() +
                            ", trace " + slow.to_poly_string());
      }
    });
    fails.drain(r);
    // Delta is stable under the left action.
    std::size_t escapes = 0;
    for (const Functional& f : delta) {
      for (const Position& p : positions_row_major(n_)) {
        for (Elem a : F_.nonzero()) {
          if (!in_delta(coact_left(F_, UniMatrix::elementary(n_, p.i, p.j, a), f))) ++escapes;
        }
      }
    }
    if (escapes != 0) r.failures.push_back(std::to_string(escapes) + " left moves leave Delta");
    r.cases = points + delta.size();
  }

  void delta_multiplicities(CheckResult& r) {
    if (!same_order(r)) return;
    const DeltaDecomposition dec = delta_decompose(n_, F_);
    BigInt deg = 0;
    for (const auto& [t, m] : dec.terms) deg += m * degree(F_, t);
    if (deg != dec.identity_value) {
      r.failures.push_back("sum mult q^d = " + deg.str() + ", expected " + dec.identity_value.str());
    }
    const std::size_t b = templates_.size();
    for (std::size_t col = 0; col < b; ++col) {
      Cyclotomic sum(F_.p());
      for (const auto& [t, m] : dec.terms) sum += brute().values()[brute().row_index(t)][col] * Rational(m);
      const BigInt expect = delta_value(F_, UniMatrix(templates_[col].matrix()));
      if (sum != Cyclotomic(F_.p(), Rational(expect))) {
        r.failures.push_back("sum mult chi at I+" + fmt(templates_[col]) + " is " + sum.to_poly_string() +
                             ", delta is " + expect.str());
      }
    }
    Failures fails(b);
    parallel_for(b, opt_.jobs, [&](std::size_t k) {
      const Template& t = templates_[k];
      const BigInt m = delta_multiplicity(F_, t);
      if ((m > 0) == is_degenerate(t)) {
        fails.add(k, fmt(t) + ": multiplicity " + m.str() + " but degenerate = " +
                         (is_degenerate(t) ? "true" : "false"));
      }
      const std::uint64_t orbits = oracle::left_orbits_in_delta(F_, t, opt_.caps.orbit);
      if (BigInt(orbits) != m) {
        fails.add(k, fmt(t) + ": multiplicity " + m.str() + " but " + std::to_string(orbits) +
                         " left orbits in cluster and Delta");
      }
    });
    fails.drain(r);
    r.cases = 2 * b + 1;
  }

  void closed_form(CheckResult& r) {
    if (!same_order(r)) return;
    const std::size_t b = templates_.size();
    for (std::size_t row = 0; row < b; ++row) {
      for (std::size_t col = 0; col < b; ++col) {
        const Cyclotomic got = char_value_closed(F_, templates_[row], templates_[col]);
        const Cyclotomic& expect = brute().values()[row][col];
        if (got != expect) {
          r.failures.push_back("chi(" + fmt(templates_[row]) + ") at I+" + fmt(templates_[col]) +
                               ": closed form " + got.to_poly_string() + ", oracle " +
                               expect.to_poly_string());
        }
      }
    }
    if (table_.values != brute().values()) r.failures.push_back("built table differs from the oracle table");
    r.cases = b * b;
  }

  void axioms(CheckResult& r) {
    for (auto& f : verify_axioms(table_).failures) r.failures.push_back(std::move(f));
    if (!same_order(r)) return;
    // Element-wise inner products over the whole group, no class weights.
    const std::size_t b = templates_.size();
    std::vector<std::vector<Cyclotomic>> expanded(b);
    for (std::size_t row = 0; row < b; ++row) {
      std::map<Template, Cyclotomic> by_col;
      for (std::size_t col = 0; col < b; ++col) by_col.emplace(templates_[col], brute().values()[row][col]);
      expanded[row] = oracle::expand_to_group(F_, brute().adjoint_orbits(), by_col, opt_.caps.group);
    }
    const std::size_t npairs = b * (b + 1) / 2;
    Failures fails(npairs);
    parallel_for(npairs, opt_.jobs, [&](std::size_t k) {
      std::size_t x = 0;
      std::size_t rem = k;
      while (rem >= b - x) {
        rem -= b - x;
        ++x;
      }
      const std::size_t y = x + rem;
      const Cyclotomic ip = oracle::brute_inner(F_, n_, expanded[x], expanded[y]);
      const Cyclotomic expect(F_.p(), x == y ? Rational(self_intertwining(F_, templates_[x])) : Rational(0));
      if (ip != expect) {
        fails.add(k, "<chi(" + fmt(templates_[x]) + "), chi(" + fmt(templates_[y]) + ")> = " +
                         ip.to_poly_string() + ", expected " + expect.to_poly_string());
      }
    });
    fails.drain(r);
    r.cases = npairs + 6;
  }

  int n_;
  Field F_;
  CertifyOptions opt_;
  PointCodec codec_;
  std::vector<Template> templates_;
  std::optional<oracle::BruteTable> brute_;
  CharacterTable table_{Field::make(2, 1), 1};
};

}  // namespace

const std::vector<std::string>& certify_keys() {
  static const std::vector<std::string> keys{"Thm4.1", "Thm3.5", "Thm6.2", "Thm7.1", "Thm8.6",
                                             "Thm9.1", "Thm9.3", "A.1",    "A.2"};
  return keys;
}

bool CertifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult& CertifyReport::at(const std::string& key) const {
  for (const CheckResult& c : checks) {
    if (c.key == key) return c;
  }
  throw ArgumentError("no check named " + key);
}

CertifyReport certify(int n, const Field& F, const CertifyOptions& options) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  return Certifier(n, F, options).run();
}

std::string format_report(const CertifyReport& report) {
  std::ostringstream os;
  os << "verify n=" << report.n << " q=" << report.q << "\n";
  for (const CheckResult& c : report.checks) {
    os << c.key << ' ' << (c.passed() ? "PASS" : "FAIL") << ' ' << c.title << " (" << c.cases << " cases)\n";
    for (const std::string& note : c.notes) os << "  note: " << note << "\n";
    for (const std::string& f : c.failures) os << "  " << f << "\n";
  }
  os << (report.ok() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

}  // namespace supercluster
