#include "supercluster/matrix.hpp"

#include <limits>

namespace supercluster {
namespace {

// Row-major n x n scratch buffer, 1-based accessors.
class Dense {
 public:
  explicit Dense(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  template <class T>
  static Dense from(const T& sparse) {
    Dense d(sparse.n());
    for (const Entry& e : sparse.entries()) d(e.pos.i, e.pos.j) = e.value;
    return d;
  }
  Elem& operator()(int i, int j) { return data_[(i - 1) * n_ + (j - 1)]; }
  Elem operator()(int i, int j) const { return data_[(i - 1) * n_ + (j - 1)]; }
  int n() const { return n_; }

  template <class T>
  T upper() const {
    T out(n_);
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) out.set(i, j, (*this)(i, j));
    }
    return out;
  }

 private:
  int n_;
  std::vector<Elem> data_;
};

void same_size(int a, int b) {
  if (a != b) {
    throw ArgumentError("size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

std::vector<Position> positions_row_major(int n) {
  std::vector<Position> out;
  out.reserve(num_positions(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

NilMatrix nil_add(const Field& F, const NilMatrix& x, const NilMatrix& y) {
  same_size(x.n(), y.n());
  NilMatrix out = x;
  for (const Entry& e : y.entries()) out.set(e.pos.i, e.pos.j, F.add(out.at(e.pos.i, e.pos.j), e.value));
  return out;
}

Functional fun_add(const Field& F, const Functional& x, const Functional& y) {
  same_size(x.n(), y.n());
  Functional out = x;
  for (const Entry& e : y.entries()) out.set(e.pos.i, e.pos.j, F.add(out.at(e.pos.i, e.pos.j), e.value));
  return out;
}

NilMatrix nil_scale(const Field& F, Elem a, const NilMatrix& x) {
  NilMatrix out(x.n());
  for (const Entry& e : x.entries()) out.set(e.pos.i, e.pos.j, F.mul(a, e.value));
  return out;
}

Functional fun_scale(const Field& F, Elem a, const Functional& x) {
  Functional out(x.n());
  for (const Entry& e : x.entries()) out.set(e.pos.i, e.pos.j, F.mul(a, e.value));
  return out;
}

NilMatrix nil_mul(const Field& F, const NilMatrix& x, const NilMatrix& y) {
  same_size(x.n(), y.n());
  Dense acc(x.n());
  for (const Entry& a : x.entries()) {
    for (const Entry& b : y.entries()) {
      if (a.pos.j != b.pos.i) continue;
      acc(a.pos.i, b.pos.j) = F.add(acc(a.pos.i, b.pos.j), F.mul(a.value, b.value));
    }
  }
  return acc.upper<NilMatrix>();
}

UniMatrix group_mul(const Field& F, const UniMatrix& g, const UniMatrix& h) {
  same_size(g.n(), h.n());
  return UniMatrix(nil_add(F, nil_add(F, g.off(), h.off()), nil_mul(F, g.off(), h.off())));
}

UniMatrix group_inv(const Field& F, const UniMatrix& g) {
  const NilMatrix neg = nil_scale(F, F.neg(F.one()), g.off());
  NilMatrix term = neg;
  NilMatrix sum = neg;
  for (int k = 2; k < g.n() && !term.is_zero(); ++k) {
    term = nil_mul(F, term, neg);
    sum = nil_add(F, sum, term);
  }
  return UniMatrix(sum);
}

UniMatrix conjugate(const Field& F, const UniMatrix& h, const UniMatrix& g) {
  return group_mul(F, group_mul(F, h, g), group_inv(F, h));
}

NilMatrix act_left(const Field& F, const UniMatrix& g, const NilMatrix& x) {
  same_size(g.n(), x.n());
  return nil_add(F, x, nil_mul(F, g.off(), x));
}

NilMatrix act_right(const Field& F, const NilMatrix& x, const UniMatrix& g) {
  same_size(g.n(), x.n());
  return nil_add(F, x, nil_mul(F, x, g.off()));
}

NilMatrix act_adjoint(const Field& F, const UniMatrix& g, const NilMatrix& x) {
  return act_right(F, act_left(F, g, x), group_inv(F, g));
}

Functional coact_left(const Field& F, const UniMatrix& g, const Functional& f) {
  same_size(g.n(), f.n());
  // (g*f)_kl = f_kl + sum_{m>l} g_lm f_km
  Dense out = Dense::from(f);
  for (const Entry& ge : g.off().entries()) {
    const int l = ge.pos.i;
    const int m = ge.pos.j;
    for (const Entry& fe : f.entries()) {
      if (fe.pos.j != m) continue;
      const int k = fe.pos.i;
      if (k >= l) continue;
      out(k, l) = F.add(out(k, l), F.mul(ge.value, fe.value));
    }
  }
  return out.upper<Functional>();
}

Functional coact_right(const Field& F, const Functional& f, const UniMatrix& g) {
  same_size(g.n(), f.n());
  // (f*g)_kl = f_kl + sum_{m<k} g_mk f_ml
  Dense out = Dense::from(f);
  for (const Entry& ge : g.off().entries()) {
    const int m = ge.pos.i;
    const int k = ge.pos.j;
    for (const Entry& fe : f.entries()) {
      if (fe.pos.i != m) continue;
      const int l = fe.pos.j;
      if (l <= k) continue;
      out(k, l) = F.add(out(k, l), F.mul(ge.value, fe.value));
    }
  }
  return out.upper<Functional>();
}

Functional coact_coadjoint(const Field& F, const Functional& f, const UniMatrix& g) {
  return coact_right(F, coact_left(F, g, f), group_inv(F, g));
}

Elem eval(const Field& F, const Functional& f, const NilMatrix& x) {
  same_size(f.n(), x.n());
  Elem acc = F.zero();
  auto a = f.entries().begin();
  auto b = x.entries().begin();
  while (a != f.entries().end() && b != x.entries().end()) {
    if (a->pos < b->pos) {
      ++a;
    } else if (b->pos < a->pos) {
      ++b;
    } else {
      acc = F.add(acc, F.mul(a->value, b->value));
      ++a;
      ++b;
    }
  }
  return acc;
}

int rank(const Field& F, std::vector<Elem> a, int rows, int cols) {
  if (static_cast<int>(a.size()) != rows * cols) throw ArgumentError("rank: buffer size mismatch");
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!a[i * cols + c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[r * cols + j]);
    }
    const Elem inv = F.inv(a[r * cols + c]);
    for (int i = r + 1; i < rows; ++i) {
      const Elem factor = F.mul(a[i * cols + c], inv);
      if (factor.is_zero()) continue;
      for (int j = c; j < cols; ++j) {
        a[i * cols + j] = F.sub(a[i * cols + j], F.mul(factor, a[r * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

int rank(const Field& F, const NilMatrix& x) {
  const int n = x.n();
  std::vector<Elem> a(static_cast<std::size_t>(n) * n);
  for (const Entry& e : x.entries()) a[(e.pos.i - 1) * n + (e.pos.j - 1)] = e.value;
  return rank(F, std::move(a), n, n);
}

PointCodec::PointCodec(const Field& F, int n)
    : n_(n), q_(F.q()), positions_(positions_row_major(n)) {
  const int N = static_cast<int>(positions_.size());
  weight_.assign(N, 1);
  std::uint64_t size = 1;
  for (int m = N - 1; m >= 0; --m) {
    weight_[m] = size;
    if (size > std::numeric_limits<std::uint64_t>::max() / 4 / static_cast<std::uint64_t>(q_)) {
      throw ResourceLimitError("point space q^" + std::to_string(N) + " too large to index");
    }
    size *= static_cast<std::uint64_t>(q_);
  }
  size_ = size;
}

std::uint64_t PointCodec::encode_entries(const std::vector<Entry>& entries) const {
  std::uint64_t code = 0;
  for (const Entry& e : entries) {
    // row-major index of (i,j)
    const int i = e.pos.i;
    const int j = e.pos.j;
    const int m = (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
    code += weight_[m] * e.value.code;
  }
  return code;
}

std::vector<Entry> PointCodec::decode_entries(std::uint64_t code) const {
  std::vector<Entry> out;
  for (std::size_t m = 0; m < positions_.size(); ++m) {
    const auto v = static_cast<std::uint16_t>(code / weight_[m]);
    code %= weight_[m];
    if (v != 0) out.push_back(Entry{positions_[m], Elem{v}});
  }
  return out;
}

}  // namespace supercluster
