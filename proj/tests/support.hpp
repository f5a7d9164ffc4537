#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "supercluster/cyclotomic.hpp"
#include "supercluster/gf.hpp"
#include "supercluster/matrix.hpp"
#include "supercluster/template.hpp"

namespace supercluster::testing {

inline Field gf(int q) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    int k = 0;
    int v = 1;
    while (v < q) {
      v *= p;
      ++k;
    }
    if (v == q) return Field::make(p, k);
  }
  throw ArgumentError("not a prime power");
}

struct E {
  int i;
  int j;
  int v;
};

inline NilMatrix nil(const Field& F, int n, std::vector<E> es) {
  NilMatrix x(n);
  for (const E& e : es) x.set(e.i, e.j, F.from_int(e.v));
  return x;
}

inline Functional fun(const Field& F, int n, std::vector<E> es) {
  Functional f(n);
  for (const E& e : es) f.set(e.i, e.j, F.from_int(e.v));
  return f;
}

inline UniMatrix uni(const Field& F, int n, std::vector<E> es) { return UniMatrix(nil(F, n, std::move(es))); }

inline Template tmpl(const Field& F, int n, const std::string& text) { return parse_template(F, n, text); }

inline Cyclotomic cint(int p, long long v) { return Cyclotomic(p, Rational(v)); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string golden(const std::string& name) { return read_file(std::string(SUPERCLUSTER_GOLDEN_DIR) + "/" + name); }

}  // namespace supercluster::testing
