#include "supercluster/cyclotomic.hpp"

#include <sstream>

#include "supercluster/errors.hpp"
#include "supercluster/gf.hpp"

namespace supercluster {

Cyclotomic::Cyclotomic(int p) : p_(p), coeffs_(static_cast<std::size_t>(p - 1)) {
  if (!is_prime(p)) throw ArgumentError("cyclotomic order must be prime");
}

Cyclotomic::Cyclotomic(int p, const Rational& value) : Cyclotomic(p) { coeffs_[0] = value; }

Cyclotomic::Cyclotomic(int p, std::vector<Rational> coeffs) : Cyclotomic(p) {
  if (static_cast<int>(coeffs.size()) != p - 1) {
    throw ArgumentError("cyclotomic of order " + std::to_string(p) + " needs " +
                        std::to_string(p - 1) + " coefficients");
  }
  coeffs_ = std::move(coeffs);
}

std::vector<Rational> Cyclotomic::reduce(int p, std::vector<Rational> full) {
  // full has p entries (exponents 0..p-1); eliminate zeta^(p-1).
  const Rational top = full[p - 1];
  full.resize(p - 1);
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

Cyclotomic Cyclotomic::zeta_power(int p, long long e) {
  std::vector<Rational> full(p);
  full[((e % p) + p) % p] = 1;
  Cyclotomic out(p);
  out.coeffs_ = reduce(p, std::move(full));
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t m = 1; m < coeffs_.size(); ++m) {
    if (coeffs_[m] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw DomainError("cyclotomic value " + to_poly_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.p_ != p_) throw ArgumentError("cyclotomic order mismatch");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.p_ != p_) throw ArgumentError("cyclotomic order mismatch");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.p_ != b.p_) throw ArgumentError("cyclotomic order mismatch");
  const int p = a.p_;
  std::vector<Rational> full(p);
  for (int i = 0; i < p - 1; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (b.coeffs_[j] == 0) continue;
      full[(i + j) % p] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Cyclotomic out(p);
  out.coeffs_ = Cyclotomic::reduce(p, std::move(full));
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::galois(int a) const {
  if (((a % p_) + p_) % p_ == 0) throw ArgumentError("galois exponent must be prime to p");
  std::vector<Rational> full(p_);
  for (int m = 0; m < p_ - 1; ++m) {
    const long long e = (static_cast<long long>(m) * a % p_ + p_) % p_;
    full[e] += coeffs_[m];
  }
  Cyclotomic out(p_);
  out.coeffs_ = reduce(p_, std::move(full));
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic");
  // x * prod_{a=2}^{p-1} sigma_a(x) = N(x) in Q.
  Cyclotomic others(p_, Rational(1));
  for (int a = 2; a < p_; ++a) others = others * galois(a);
  const Cyclotomic norm = *this * others;
  return others * (Rational(1) / norm.rational());
}

std::string Cyclotomic::to_poly_string() const {
  std::string out;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    const Rational& c = coeffs_[m];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string coef = is_integer(mag) ? boost::multiprecision::numerator(mag).str()
                                       : to_fraction_string(mag);
    std::string term;
    if (m == 0) {
      term = coef;
    } else {
      const std::string power = m == 1 ? "z" : "z^" + std::to_string(m);
      term = mag == 1 ? power : coef + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic ZetaHistogram::value() const {
  const int p = this->p();
  const long long top = counts_[p - 1];
  std::vector<Rational> coeffs(p - 1);
  for (int m = 0; m < p - 1; ++m) coeffs[m] = Rational(counts_[m] - top);
  return Cyclotomic(p, std::move(coeffs));
}

Cyclotomic parse_cyclotomic(int p, const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) {
    try {
      c.emplace_back(s);
    } catch (const std::exception&) {
      throw ArgumentError("bad rational '" + s + "'");
    }
  }
  return Cyclotomic(p, std::move(c));
}

namespace {

// Row-reduces `a` in place (optionally mirroring row operations on `b`);
// returns the pivot columns.
std::vector<int> eliminate(CycMatrix& a, CycMatrix* b) {
  std::vector<int> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    if (b) std::swap((*b)[pivot], (*b)[r]);
    const Cyclotomic inv = a[r][c].inverse();
    for (auto& x : a[r]) x = x * inv;
    if (b) {
      for (auto& x : (*b)[r]) x = x * inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Cyclotomic factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= factor * a[r][j];
      }
      if (b) {
        for (std::size_t j = 0; j < (*b)[i].size(); ++j) {
          if (!(*b)[r][j].is_zero()) (*b)[i][j] -= factor * (*b)[r][j];
        }
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(CycMatrix a) { return static_cast<int>(eliminate(a, nullptr).size()); }

CycMatrix inverse(CycMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  const int p = a[0][0].p();
  CycMatrix id(n, std::vector<Cyclotomic>(n, Cyclotomic(p)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ArgumentError("inverse: matrix is not square");
    id[i][i] = Cyclotomic(p, Rational(1));
  }
  if (eliminate(a, &id).size() != n) throw DomainError("inverse: matrix is singular");
  return id;
}

}  // namespace supercluster
