#include "supercluster/template.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>

namespace supercluster {

bool is_rook_placement(const std::vector<Position>& support) {
  std::set<int> rows, cols;
  for (const Position& p : support) {
    if (!rows.insert(p.i).second || !cols.insert(p.j).second) return false;
  }
  return true;
}

Template::Template(int n) : n_(n) {
  if (n < 1) throw ArgumentError("template size must be >= 1");
}

Template::Template(int n, std::vector<Cell> cells) : Template(n) {
  std::vector<Position> support;
  for (const Cell& c : cells) {
    if (c.i < 1 || c.j > n || c.i >= c.j) {
      throw ArgumentError("template cell (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                          ") is not strictly upper in size " + std::to_string(n));
    }
    if (c.a.is_zero()) throw ArgumentError("template cells must carry non-zero values");
    support.push_back(c.pos());
  }
  if (!is_rook_placement(support)) {
    throw ArgumentError("template cells share a row or a column");
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& x, const Cell& y) { return x.pos() < y.pos(); });
  cells_ = std::move(cells);
}

namespace {

template <class T>
Template from_sparse(const T& s) {
  std::vector<Cell> cells;
  for (const Entry& e : s.entries()) cells.push_back(Cell{e.pos.i, e.pos.j, e.value});
  return Template(s.n(), std::move(cells));
}

}  // namespace

Template Template::from_functional(const Functional& f) { return from_sparse(f); }
Template Template::from_matrix(const NilMatrix& x) { return from_sparse(x); }

Elem Template::at(int i, int j) const {
  for (const Cell& c : cells_) {
    if (c.i == i && c.j == j) return c.a;
  }
  return Elem{};
}

Functional Template::functional() const {
  Functional f(n_);
  for (const Cell& c : cells_) f.set(c.i, c.j, c.a);
  return f;
}

NilMatrix Template::matrix() const { return to_matrix(functional()); }

std::vector<Position> Template::support() const {
  std::vector<Position> out;
  for (const Cell& c : cells_) out.push_back(c.pos());
  return out;
}

std::strong_ordering operator<=>(const Template& a, const Template& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.cells_.size() <=> b.cells_.size(); c != 0) return c;
  auto diagonal_order = [](std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
      return std::make_tuple(x.j - x.i, x.i) < std::make_tuple(y.j - y.i, y.i);
    });
    return cells;
  };
  const auto ca = diagonal_order(a.cells_);
  const auto cb = diagonal_order(b.cells_);
  for (std::size_t m = 0; m < ca.size(); ++m) {
    const auto ka = std::make_tuple(ca[m].j - ca[m].i, ca[m].i);
    const auto kb = std::make_tuple(cb[m].j - cb[m].i, cb[m].i);
    if (auto c = ka <=> kb; c != 0) return c;
  }
  for (std::size_t m = 0; m < ca.size(); ++m) {
    if (auto c = ca[m].a <=> cb[m].a; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string format_template(const Field& F, const Template& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const Cell& c : t.cells()) {
    if (!out.empty()) out += ';';
    out += "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")=" + F.format(c.a);
  }
  return out;
}

namespace {

int parse_index(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ArgumentError("bad template index '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Template parse_template(const Field& F, int n, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "0" || text.empty()) return Template(n);
  std::vector<Cell> cells;
  while (!text.empty()) {
    const auto semi = text.find(';');
    std::string_view cell = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
    const auto close = cell.find(")=");
    const auto comma = cell.find(',');
    if (cell.empty() || cell.front() != '(' || close == std::string_view::npos || comma > close) {
      throw ArgumentError("bad template cell '" + std::string(cell) + "'");
    }
    const int i = parse_index(cell.substr(1, comma - 1));
    const int j = parse_index(cell.substr(comma + 1, close - comma - 1));
    cells.push_back(Cell{i, j, F.parse(cell.substr(close + 2))});
  }
  return Template(n, std::move(cells));
}

}  // namespace supercluster
