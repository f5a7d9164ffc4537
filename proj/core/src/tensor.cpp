#include "supercluster/tensor.hpp"

#include <algorithm>
#include <unordered_map>

namespace supercluster {

BigInt CharSum::multiplicity(const Template& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void CharSum::add(const Template& t, const BigInt& mult) {
  if (t.n() != n_) throw ArgumentError("CharSum: template size mismatch");
  if (mult < 0) throw ArgumentError("CharSum: negative multiplicity");
  if (mult == 0) return;
  terms_[t] += mult;
}

void CharSum::add(const CharSum& other, const BigInt& scale) {
  for (const auto& [t, m] : other.terms_) add(t, m * scale);
}

BigInt CharSum::total_degree() const {
  BigInt acc = 0;
  for (const auto& [t, m] : terms_) acc += m * ipow(field_.q(), static_cast<unsigned>(invariants_of(t).d));
  return acc;
}

namespace {

using Factors = std::vector<PrimaryFactor>;

class Rewriter {
 public:
  Rewriter(const Field& F, int n, SameCellExpansion mode) : F_(F), n_(n), mode_(mode) {}

  CharSum run(Factors factors) {
    normalize(factors);
    if (auto it = memo_.find(factors); it != memo_.end()) return it->second;
    CharSum out(F_, n_);
    expand(factors, out);
    memo_.emplace(std::move(factors), out);
    return out;
  }

 private:
  static bool second_diagonal(const PrimaryFactor& f) { return f.j == f.i + 1; }

  // Drops trivial factors and applies the second-diagonal absorptions until stable.
  void normalize(Factors& fs) const {
    std::erase_if(fs, [](const PrimaryFactor& f) { return f.a.is_zero(); });
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < fs.size() && !changed; ++x) {
        if (!second_diagonal(fs[x])) continue;
        for (std::size_t y = 0; y < fs.size() && !changed; ++y) {
          if (x == y) continue;
          const PrimaryFactor& a = fs[x];
          const PrimaryFactor& b = fs[y];
          if (a.i == b.i && a.j == b.j) {
            const Elem sum = F_.add(a.a, b.a);
            const PrimaryFactor merged{a.i, a.j, sum};
            fs.erase(fs.begin() + std::max(x, y));
            fs.erase(fs.begin() + std::min(x, y));
            if (!sum.is_zero()) fs.push_back(merged);
            changed = true;
          } else if ((a.i == b.i && b.j > a.j) || (a.j == b.j && b.i < a.i)) {
            fs.erase(fs.begin() + x);
            changed = true;
          }
        }
      }
    }
    std::sort(fs.begin(), fs.end());
  }

  void expand(const Factors& fs, CharSum& out) {
    for (std::size_t x = 0; x < fs.size(); ++x) {
      for (std::size_t y = x + 1; y < fs.size(); ++y) {
        if (fs[x].i != fs[y].i && fs[x].j != fs[y].j) continue;
        Factors rest;
        for (std::size_t k = 0; k < fs.size(); ++k) {
          if (k != x && k != y) rest.push_back(fs[k]);
        }
        expand_pair(fs[x], fs[y], rest, out);
        return;
      }
    }
    // Pairwise disjoint rows and columns: a single cluster character.
    std::vector<Cell> cells;
    for (const PrimaryFactor& f : fs) cells.push_back(Cell{f.i, f.j, f.a});
    out.add(Template(n_, std::move(cells)));
  }

  void branch(Factors base, std::initializer_list<PrimaryFactor> extra, CharSum& out) {
    base.insert(base.end(), extra.begin(), extra.end());
    out.add(run(std::move(base)));
  }

  void expand_pair(PrimaryFactor x, PrimaryFactor y, const Factors& rest, CharSum& out) {
    const auto nonzero = F_.nonzero();
    if (x.i == y.i && x.j == y.j) {
      const int i = x.i;
      const int j = x.j;
      const Elem sum = F_.add(x.a, y.a);
      if (!sum.is_zero()) {
        const PrimaryFactor merged{i, j, sum};
        branch(rest, {merged}, out);
        for (int m = i + 1; m < j; ++m) {
          for (Elem c : nonzero) {
            if (mode_ == SameCellExpansion::kColumn) {
              branch(rest, {merged, PrimaryFactor{m, j, c}}, out);
            } else {
              branch(rest, {merged, PrimaryFactor{i, m, c}}, out);
            }
          }
        }
      } else {
        // [chi(0) + sum chi(i',j,b)] (x) [chi(0) + sum chi(i,j',c)]
        std::vector<PrimaryFactor> column{PrimaryFactor{i, j, Elem{}}};
        std::vector<PrimaryFactor> row{PrimaryFactor{i, j, Elem{}}};
        for (int m = i + 1; m < j; ++m) {
          for (Elem c : nonzero) {
            column.push_back(PrimaryFactor{m, j, c});
            row.push_back(PrimaryFactor{i, m, c});
          }
        }
        for (const PrimaryFactor& a : column) {
          for (const PrimaryFactor& b : row) branch(rest, {a, b}, out);
        }
      }
      return;
    }
    if (x.j == y.j) {
      // Same column: the higher factor stays, the lower one dissolves.
      const PrimaryFactor& high = x.i < y.i ? x : y;
      const PrimaryFactor& low = x.i < y.i ? y : x;
      branch(rest, {high}, out);
      for (int m = low.i + 1; m < low.j; ++m) {
        for (Elem c : nonzero) branch(rest, {high, PrimaryFactor{low.i, m, c}}, out);
      }
      return;
    }
    // Same row: the right factor stays, the left one dissolves.
    const PrimaryFactor& right = x.j > y.j ? x : y;
    const PrimaryFactor& left = x.j > y.j ? y : x;
    branch(rest, {right}, out);
    for (int m = left.i + 1; m < left.j; ++m) {
      for (Elem c : nonzero) branch(rest, {right, PrimaryFactor{m, left.j, c}}, out);
    }
  }

  const Field& F_;
  int n_;
  SameCellExpansion mode_;
  std::map<Factors, CharSum> memo_;
};

void check_factor(int n, const PrimaryFactor& f) {
  if (f.i < 1 || f.j > n || f.i >= f.j) {
    throw ArgumentError("factor (" + std::to_string(f.i) + "," + std::to_string(f.j) +
                        ") is not strictly upper in size " + std::to_string(n));
  }
}

}  // namespace

CharSum tensor_rewrite(const Field& F, int n, const std::vector<PrimaryFactor>& factors,
                       SameCellExpansion mode) {
  for (const auto& f : factors) {
    check_factor(n, f);
    if (!F.contains(f.a)) throw ArgumentError("factor value outside the field");
  }
  return Rewriter(F, n, mode).run(factors);
}

CharSum primary_product(const Field& F, int n, PrimaryFactor first, PrimaryFactor second,
                        SameCellExpansion mode) {
  return tensor_rewrite(F, n, {first, second}, mode);
}

CharSum tensor_templates(const Field& F, const Template& t1, const Template& t2,
                         SameCellExpansion mode) {
  if (t1.n() != t2.n()) throw ArgumentError("tensor_templates: size mismatch");
  std::vector<PrimaryFactor> factors;
  for (const Template* t : {&t1, &t2}) {
    for (const Cell& c : primary_components(*t)) factors.push_back(PrimaryFactor{c.i, c.j, c.a});
  }
  return tensor_rewrite(F, t1.n(), factors, mode);
}

std::map<Template, BigInt> pair_sum_counts(const Field& F, const Template& t1, const Template& t2,
                                           std::uint64_t cap) {
  if (t1.n() != t2.n()) throw ArgumentError("pair_sum_counts: size mismatch");
  if (cluster_size(F, t1) * cluster_size(F, t2) > cap) {
    throw ResourceLimitError("cluster pair set for " + format_template(F, t1) + " x " +
                             format_template(F, t2) + " exceeds the cap " + std::to_string(cap));
  }
  const auto c1 = cluster_elements(F, t1, cap);
  const auto c2 = cluster_elements(F, t2, cap);
  const PointCodec codec(F, t1.n());
  std::unordered_map<std::uint64_t, std::size_t> class_of;
  std::vector<Template> classes;
  std::vector<BigInt> counts;
  for (const Functional& a : c1) {
    for (const Functional& b : c2) {
      const Functional s = fun_add(F, a, b);
      const std::uint64_t code = codec.encode(s);
      auto it = class_of.find(code);
      if (it == class_of.end()) {
        const Template t = coadjoint_template_of(F, s).tmpl;
        std::size_t idx = std::find(classes.begin(), classes.end(), t) - classes.begin();
        if (idx == classes.size()) {
          classes.push_back(t);
          counts.push_back(0);
        }
        it = class_of.emplace(code, idx).first;
      }
      counts[it->second] += 1;
    }
  }
  std::map<Template, BigInt> out;
  for (std::size_t k = 0; k < classes.size(); ++k) out.emplace(classes[k], counts[k]);
  return out;
}

BigInt c_count(const Field& F, const Template& t1, const Template& t2, const Template& t,
               std::uint64_t cap) {
  const auto counts = pair_sum_counts(F, t1, t2, cap);
  auto it = counts.find(t);
  return it == counts.end() ? BigInt(0) : it->second;
}

CharSum tensor_by_counting(const Field& F, const Template& t1, const Template& t2,
                           std::uint64_t cap) {
  const auto inv1 = invariants_of(t1);
  const auto inv2 = invariants_of(t2);
  CharSum out(F, t1.n());
  for (const auto& [t, count] : pair_sum_counts(F, t1, t2, cap)) {
    const int exponent = inv1.i + inv2.i - inv1.d - inv2.d - invariants_of(t).d;
    const Rational mult = rpow(F.q(), exponent) * Rational(count);
    if (!is_integer(mult) || mult < 0) {
      throw InvariantViolation("tensor multiplicity of chi(" + format_template(F, t) + ") in chi(" +
                               format_template(F, t1) + ") x chi(" + format_template(F, t2) +
                               ") is " + to_fraction_string(mult) +
                               ", not a non-negative integer");
    }
    out.add(t, boost::multiprecision::numerator(mult));
  }
  return out;
}

}  // namespace supercluster
