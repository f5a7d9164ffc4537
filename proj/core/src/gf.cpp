#include "supercluster/gf.hpp"

#include <charconv>
#include <sstream>

#include "supercluster/errors.hpp"

namespace supercluster {
namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  trim(a);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly decode(int code, int p, int k) {
  Poly c(k, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int encode(const Poly& c, int p) {
  int code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly divisor = decode(code, p, d);
      divisor.push_back(1);
      if (poly_mod(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(int p, int k, int max_q) {
  if (!is_prime(p)) throw ArgumentError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ArgumentError("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > max_q) {
      throw ArgumentError("field size " + std::to_string(p) + "^" + std::to_string(k) +
                          " exceeds the cap q <= " + std::to_string(max_q));
    }
  }

  auto tables = std::make_shared<Tables>();
  const int qi = static_cast<int>(q);
  for (int code = 0; code < qi; ++code) {
    Poly candidate = decode(code, p, k);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      tables->modulus = candidate;
      break;
    }
  }
  if (tables->modulus.empty()) throw InternalError("no irreducible polynomial found");

  tables->add.resize(q * q);
  tables->mul.resize(q * q);
  tables->neg.resize(q);
  tables->inv.assign(q, 0);
  tables->trace.resize(q);
  for (int a = 0; a < qi; ++a) {
    const Poly pa = decode(a, p, k);
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    tables->neg[a] = static_cast<std::uint16_t>(encode(na, p));
    for (int b = 0; b < qi; ++b) {
      const Poly pb = decode(b, p, k);
      Poly sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      tables->add[a * qi + b] = static_cast<std::uint16_t>(encode(sum, p));

      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
      Poly red = poly_mod(prod, tables->modulus, p);
      red.resize(k, 0);
      tables->mul[a * qi + b] = static_cast<std::uint16_t>(encode(red, p));
    }
  }
  for (int a = 1; a < qi; ++a) {
    for (int b = 1; b < qi; ++b) {
      if (tables->mul[a * qi + b] == 1) {
        tables->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  for (int a = 0; a < qi; ++a) {
    // a + a^p + ... + a^(p^(k-1))
    int power = a;
    int acc = 0;
    for (int i = 0; i < k; ++i) {
      acc = tables->add[acc * qi + power];
      int next = 1;
      for (int e = 0; e < p; ++e) next = tables->mul[next * qi + power];
      power = next;
    }
    if (acc >= p) throw InternalError("trace left the prime field");
    tables->trace[a] = acc;
  }
  return Field(p, k, std::move(tables));
}

Elem Field::from_int(long long v) const {
  return Elem{static_cast<std::uint16_t>(((v % p_) + p_) % p_)};
}

Elem Field::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != k_) {
    throw ArgumentError("expected " + std::to_string(k_) + " coefficients");
  }
  for (int c : coeffs) {
    if (c < 0 || c >= p_) throw ArgumentError("coefficient out of range [0, p)");
  }
  return Elem{static_cast<std::uint16_t>(encode(coeffs, p_))};
}

Elem Field::from_code(int code) const {
  if (code < 0 || code >= q_) throw ArgumentError("element code out of range");
  return Elem{static_cast<std::uint16_t>(code)};
}

std::vector<int> Field::coeffs(Elem a) const { return decode(a.code, p_, k_); }

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw DomainError("inverse of zero in GF(" + std::to_string(q_) + ")");
  return Elem{tables_->inv[a.code]};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (int c = 0; c < q_; ++c) out.push_back(Elem{static_cast<std::uint16_t>(c)});
  return out;
}

std::vector<Elem> Field::nonzero() const {
  std::vector<Elem> out;
  out.reserve(q_ - 1);
  for (int c = 1; c < q_; ++c) out.push_back(Elem{static_cast<std::uint16_t>(c)});
  return out;
}

std::string Field::format(Elem a) const {
  if (k_ == 1) return std::to_string(a.code);
  std::ostringstream os;
  os << '[';
  const auto c = coeffs(a);
  for (int i = 0; i < k_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

namespace {

long long parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ArgumentError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Elem Field::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ArgumentError("unterminated field element '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::vector<int> c;
    while (true) {
      const auto comma = text.find(',');
      c.push_back(static_cast<int>(parse_int(text.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return from_coeffs(c);
  }
  if (k_ != 1) throw ArgumentError("extension-field elements must be written as [c0,...]");
  return from_int(parse_int(text));
}

}  // namespace supercluster
