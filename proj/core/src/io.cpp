#include "supercluster/io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "supercluster/clusters.hpp"

namespace supercluster::io {
namespace {

using nlohmann::ordered_json;

ordered_json entries_json(const Field& F, int n, const std::vector<Entry>& entries, const char* kind) {
  ordered_json out;
  out["kind"] = kind;
  out["n"] = n;
  out["entries"] = ordered_json::array();
  for (const Entry& e : entries) {
    out["entries"].push_back({{"i", e.pos.i}, {"j", e.pos.j}, {"v", F.format(e.value)}});
  }
  return out;
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T get(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

std::vector<Entry> entries_from(const Field& F, const ordered_json& j, const char* kind, int& n) {
  if (get<std::string>(j, "kind") != kind) {
    throw ArgumentError(std::string("expected kind '") + kind + "', got '" + get<std::string>(j, "kind") + "'");
  }
  n = get<int>(j, "n");
  std::vector<Entry> out;
  for (const auto& e : get<ordered_json>(j, "entries")) {
    out.push_back(Entry{Position{get<int>(e, "i"), get<int>(e, "j")}, F.parse(get<std::string>(e, "v"))});
  }
  return out;
}

ordered_json cyc_json(const Cyclotomic& c) {
  ordered_json out;
  out["p"] = c.p();
  out["coeffs"] = ordered_json::array();
  for (const Rational& r : c.coeffs()) out["coeffs"].push_back(to_fraction_string(r));
  return out;
}

Cyclotomic cyc_from(const ordered_json& j) {
  return parse_cyclotomic(get<int>(j, "p"), get<std::vector<std::string>>(j, "coeffs"));
}

ordered_json big_array(const std::vector<BigInt>& v) {
  ordered_json out = ordered_json::array();
  for (const BigInt& x : v) out.push_back(x.str());
  return out;
}

std::vector<BigInt> big_vector(const ordered_json& j, const char* key) {
  std::vector<BigInt> out;
  for (const auto& s : get<std::vector<std::string>>(j, key)) {
    try {
      out.emplace_back(s);
    } catch (const std::exception&) {
      throw ArgumentError("bad integer '" + s + "' in '" + key + "'");
    }
  }
  return out;
}

// Multiplicities print as JSON numbers when they fit, strings otherwise.
ordered_json mult_json(const BigInt& m) {
  if (m <= std::numeric_limits<std::int64_t>::max()) return m.convert_to<std::int64_t>();
  return m.str();
}

ordered_json terms_json(const Field& F, const std::map<Template, BigInt>& terms) {
  ordered_json out = ordered_json::array();
  for (const auto& [t, m] : terms) out.push_back({{"template", format_template(F, t)}, {"mult", mult_json(m)}});
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string aligned(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

struct ClusterRow {
  std::string tmpl;
  int d;
  int i;
  std::string cluster_size;
  std::string superclass_size;
  std::string degree;
  std::string self_intertwining;
};

std::vector<ClusterRow> cluster_rows(const Field& F, const std::vector<Template>& templates) {
  std::vector<ClusterRow> out;
  for (const Template& t : templates) {
    const auto inv = invariants_of(t);
    out.push_back(ClusterRow{format_template(F, t), inv.d, inv.i, cluster_size(F, t).str(),
                             adjoint_cluster_size(F, t).str(), degree(F, t).str(),
                             self_intertwining(F, t).str()});
  }
  return out;
}

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_json(const Field& F, const NilMatrix& x) {
  return entries_json(F, x.n(), x.entries(), "nil").dump();
}

std::string to_json(const Field& F, const UniMatrix& g) {
  return entries_json(F, g.n(), g.off().entries(), "uni").dump();
}

std::string to_json(const Field& F, const Functional& f) {
  return entries_json(F, f.n(), f.entries(), "fun").dump();
}

NilMatrix nil_from_json(const Field& F, std::string_view text) {
  int n = 1;
  auto e = entries_from(F, parse(text), "nil", n);
  return NilMatrix(n, std::move(e));
}

UniMatrix uni_from_json(const Field& F, std::string_view text) {
  int n = 1;
  auto e = entries_from(F, parse(text), "uni", n);
  return UniMatrix(NilMatrix(n, std::move(e)));
}

Functional fun_from_json(const Field& F, std::string_view text) {
  int n = 1;
  auto e = entries_from(F, parse(text), "fun", n);
  return Functional(n, std::move(e));
}

std::string to_json(const Cyclotomic& c) { return cyc_json(c).dump(); }

Cyclotomic cyclotomic_from_json(std::string_view text) { return cyc_from(parse(text)); }

std::string table_json(const CharacterTable& t) {
  ordered_json out;
  out["n"] = t.n;
  out["p"] = t.field.p();
  out["k"] = t.field.k();
  auto names = [&](const std::vector<Template>& v) {
    ordered_json a = ordered_json::array();
    for (const Template& x : v) a.push_back(format_template(t.field, x));
    return a;
  };
  out["rows"] = names(t.rows);
  out["cols"] = names(t.cols);
  out["values"] = ordered_json::array();
  for (const auto& row : t.values) {
    ordered_json r = ordered_json::array();
    for (const Cyclotomic& c : row) r.push_back(cyc_json(c));
    out["values"].push_back(std::move(r));
  }
  out["degrees"] = big_array(t.row_degrees);
  out["self_intertwining"] = big_array(t.row_selfint);
  out["col_sizes"] = big_array(t.col_sizes);
  return dump(out);
}

CharacterTable table_from_json(std::string_view text) {
  const ordered_json j = parse(text);
  const int n = get<int>(j, "n");
  CharacterTable t{Field::make(get<int>(j, "p"), get<int>(j, "k")), n};
  for (const auto& s : get<std::vector<std::string>>(j, "rows")) t.rows.push_back(parse_template(t.field, n, s));
  for (const auto& s : get<std::vector<std::string>>(j, "cols")) t.cols.push_back(parse_template(t.field, n, s));
  for (const auto& row : get<ordered_json>(j, "values")) {
    std::vector<Cyclotomic> r;
    for (const auto& c : row) r.push_back(cyc_from(c));
    if (r.size() != t.cols.size()) throw ArgumentError("table row length differs from column count");
    t.values.push_back(std::move(r));
  }
  if (t.values.size() != t.rows.size()) throw ArgumentError("table value rows differ from row count");
  t.row_degrees = big_vector(j, "degrees");
  t.row_selfint = big_vector(j, "self_intertwining");
  t.col_sizes = big_vector(j, "col_sizes");
  if (t.row_degrees.size() != t.rows.size() || t.row_selfint.size() != t.rows.size() ||
      t.col_sizes.size() != t.cols.size()) {
    throw ArgumentError("table metadata length mismatch");
  }
  return t;
}

std::string table_csv(const CharacterTable& t) {
  std::ostringstream os;
  os << "template";
  for (const Template& c : t.cols) os << ',' << csv_field(format_template(t.field, c));
  os << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << csv_field(format_template(t.field, t.rows[r]));
    for (const Cyclotomic& v : t.values[r]) os << ',' << csv_field(v.to_poly_string());
    os << "\n";
  }
  return os.str();
}

std::string table_text(const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"chi \\ X"};
  for (const Template& c : t.cols) head.push_back(format_template(t.field, c));
  cells.push_back(std::move(head));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> row{format_template(t.field, t.rows[r])};
    for (const Cyclotomic& v : t.values[r]) row.push_back(v.to_poly_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::string> sizes{"|K|"};
  for (const BigInt& s : t.col_sizes) sizes.push_back(s.str());
  cells.push_back(std::move(sizes));
  return aligned(cells);
}

std::string clusters_json(const Field& F, const std::vector<Template>& templates) {
  ordered_json out = ordered_json::array();
  for (const ClusterRow& r : cluster_rows(F, templates)) {
    ordered_json o;
    o["template"] = r.tmpl;
    o["d"] = r.d;
    o["i"] = r.i;
    o["cluster_size"] = r.cluster_size;
    o["superclass_size"] = r.superclass_size;
    o["degree"] = r.degree;
    o["self_intertwining"] = r.self_intertwining;
    out.push_back(std::move(o));
  }
  return dump(out);
}

std::string clusters_csv(const Field& F, const std::vector<Template>& templates) {
  std::ostringstream os;
  os << "template,d,i,cluster_size,superclass_size,degree,self_intertwining\n";
  for (const ClusterRow& r : cluster_rows(F, templates)) {
    os << csv_field(r.tmpl) << ',' << r.d << ',' << r.i << ',' << r.cluster_size << ',' << r.superclass_size
       << ',' << r.degree << ',' << r.self_intertwining << "\n";
  }
  return os.str();
}

std::string clusters_text(const Field& F, const std::vector<Template>& templates) {
  std::vector<std::vector<std::string>> cells{{"template", "d", "i", "|cluster|", "|superclass|", "degree", "q^i"}};
  for (const ClusterRow& r : cluster_rows(F, templates)) {
    cells.push_back({r.tmpl, std::to_string(r.d), std::to_string(r.i), r.cluster_size, r.superclass_size,
                     r.degree, r.self_intertwining});
  }
  return aligned(cells);
}

std::string tensor_json(const CharSum& sum) {
  ordered_json out;
  out["terms"] = terms_json(sum.field(), sum.terms());
  out["total_degree"] = sum.total_degree().str();
  return dump(out);
}

std::string tensor_csv(const CharSum& sum) {
  std::ostringstream os;
  os << "template,mult\n";
  for (const auto& [t, m] : sum.terms()) os << csv_field(format_template(sum.field(), t)) << ',' << m << "\n";
  return os.str();
}

std::string tensor_text(const CharSum& sum) {
  std::vector<std::vector<std::string>> cells{{"template", "mult"}};
  for (const auto& [t, m] : sum.terms()) cells.push_back({format_template(sum.field(), t), m.str()});
  return aligned(cells) + "total degree " + sum.total_degree().str() + "\n";
}

std::string discrete_json(const DeltaDecomposition& dec) {
  ordered_json out;
  out["identity_value"] = dec.identity_value.str();
  out["terms"] = terms_json(dec.field, dec.terms);
  return dump(out);
}

std::string discrete_csv(const DeltaDecomposition& dec) {
  std::ostringstream os;
  os << "template,mult\n";
  for (const auto& [t, m] : dec.terms) os << csv_field(format_template(dec.field, t)) << ',' << m << "\n";
  return os.str();
}

std::string discrete_text(const DeltaDecomposition& dec) {
  std::vector<std::vector<std::string>> cells{{"template", "mult"}};
  for (const auto& [t, m] : dec.terms) cells.push_back({format_template(dec.field, t), m.str()});
  return aligned(cells) + "identity value " + dec.identity_value.str() + "\n";
}

}  // namespace supercluster::io
