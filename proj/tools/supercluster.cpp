// supercluster: command-line front end for the supercharacter library.
//
// Exit codes: 0 success, 1 unexpected error, 2 usage error, 3 resource cap
// exceeded, 4 a proven identity failed on this input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supercluster/certify.hpp"
#include "supercluster/characters.hpp"
#include "supercluster/clusters.hpp"
#include "supercluster/discrete.hpp"
#include "supercluster/io.hpp"
#include "supercluster/oracle.hpp"
#include "supercluster/tensor.hpp"

namespace sc = supercluster;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvariant = 4;

struct RunConfig {
  int n = 0;
  int p = 0;
  int k = 1;
  int q = 0;
  std::string format;
  int jobs = 0;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> cap_orbit;
  std::optional<std::uint64_t> cap_group;
  std::string emit_golden;
  bool check = false;
  std::vector<std::string> factors;
};

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s.front() == '-' || v == 0) {
    throw sc::ArgumentError(what + ": expected a positive integer, got '" + s + "'");
  }
  return v;
}

// SUPERCLUSTER_CAPS="group=N,orbit=N"; explicit flags win.
sc::oracle::Caps resolve_caps(const RunConfig& cfg) {
  sc::oracle::Caps caps;
  if (const char* env = std::getenv("SUPERCLUSTER_CAPS"); env != nullptr && *env != '\0') {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw sc::ArgumentError("SUPERCLUSTER_CAPS: expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::uint64_t value = parse_u64(item.substr(eq + 1), "SUPERCLUSTER_CAPS " + key);
      if (key == "group") {
        caps.group = value;
      } else if (key == "orbit") {
        caps.orbit = value;
      } else {
        throw sc::ArgumentError("SUPERCLUSTER_CAPS: unknown key '" + key + "'");
      }
    }
  }
  if (cfg.cap_group) caps.group = *cfg.cap_group;
  if (cfg.cap_orbit) caps.orbit = *cfg.cap_orbit;
  if (caps.group == 0 || caps.orbit == 0) throw sc::ArgumentError("caps must be positive");
  return caps;
}

sc::Field resolve_field(const RunConfig& cfg) {
  if (cfg.q != 0) {
    if (cfg.p != 0 || cfg.k != 1) throw sc::ArgumentError("give either --q or --p/--k, not both");
    if (!sc::is_prime(cfg.q)) {
      throw sc::ArgumentError("--q accepts primes only; use --p and --k for q = " + std::to_string(cfg.q));
    }
    return sc::Field::make(cfg.q, 1);
  }
  if (cfg.p == 0) throw sc::ArgumentError("the field is required: --q or --p [--k]");
  return sc::Field::make(cfg.p, cfg.k);
}

void check_n(const RunConfig& cfg) {
  if (cfg.n < 1) throw sc::ArgumentError("--n must be >= 1");
}

std::string pick_format(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "csv" && f != "text") throw sc::ArgumentError("unknown format '" + f + "'");
  return f;
}

// Prints to stdout, or writes the golden file when --emit-golden is set.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.emit_golden.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.emit_golden, std::ios::binary);
  if (!out) throw sc::ArgumentError("cannot write '" + cfg.emit_golden + "'");
  out << text;
  std::cerr << "wrote " << cfg.emit_golden << "\n";
}

sc::PrimaryFactor parse_factor(const sc::Field& F, const std::string& s) {
  // i,j,a with a possibly "[c0,c1]": split on the first two commas only.
  const auto c1 = s.find(',');
  const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(',', c1 + 1);
  if (c2 == std::string::npos) throw sc::ArgumentError("--factor expects i,j,a; got '" + s + "'");
  try {
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    const std::string si = s.substr(0, c1);
    const std::string sj = s.substr(c1 + 1, c2 - c1 - 1);
    const int i = std::stoi(si, &u1);
    const int j = std::stoi(sj, &u2);
    if (u1 != si.size() || u2 != sj.size()) throw std::invalid_argument("trailing characters");
    return sc::PrimaryFactor{i, j, F.parse(s.substr(c2 + 1))};
  } catch (const sc::ArgumentError&) {
    throw;
  } catch (const std::exception&) {
    throw sc::ArgumentError("--factor expects i,j,a; got '" + s + "'");
  }
}

std::string render(const sc::CharacterTable& t, const std::string& fmt) {
  if (fmt == "json") return sc::io::table_json(t);
  if (fmt == "csv") return sc::io::table_csv(t);
  return sc::io::table_text(t);
}

std::string render(const sc::CharSum& s, const std::string& fmt) {
  if (fmt == "json") return sc::io::tensor_json(s);
  if (fmt == "csv") return sc::io::tensor_csv(s);
  return sc::io::tensor_text(s);
}

std::string render(const sc::DeltaDecomposition& d, const std::string& fmt) {
  if (fmt == "json") return sc::io::discrete_json(d);
  if (fmt == "csv") return sc::io::discrete_csv(d);
  return sc::io::discrete_text(d);
}

int cmd_table(const RunConfig& cfg) {
  check_n(cfg);
  const sc::Field F = resolve_field(cfg);
  const auto caps = resolve_caps(cfg);
  const std::string fmt = pick_format(cfg, "json");
  if (!cfg.emit_golden.empty()) {
    emit(cfg, render(sc::oracle::brute_character_table(sc::oracle::BruteTable(cfg.n, F, caps)), fmt));
    return 0;
  }
  sc::TableOptions opt;
  opt.template_cap = caps.group;
  opt.jobs = cfg.jobs;
  emit(cfg, render(sc::build_table(cfg.n, F, opt), fmt));
  return 0;
}

int cmd_clusters(const RunConfig& cfg) {
  check_n(cfg);
  const sc::Field F = resolve_field(cfg);
  const auto caps = resolve_caps(cfg);
  const std::string fmt = pick_format(cfg, "json");
  const auto templates = sc::enumerate_templates(cfg.n, F, caps.group);
  if (fmt == "json") {
    emit(cfg, sc::io::clusters_json(F, templates));
  } else if (fmt == "csv") {
    emit(cfg, sc::io::clusters_csv(F, templates));
  } else {
    emit(cfg, sc::io::clusters_text(F, templates));
  }
  return 0;
}

// chi(primary) for one factor, as a template (trivial when a = 0).
sc::Template factor_template(int n, const sc::PrimaryFactor& f) {
  if (f.a.is_zero()) return sc::Template(n);
  return sc::Template(n, {sc::Cell{f.i, f.j, f.a}});
}

sc::CharSum tensor_counting_fold(const sc::Field& F, int n, const std::vector<sc::PrimaryFactor>& factors) {
  sc::CharSum acc(F, n);
  acc.add(sc::Template(n));
  for (const auto& f : factors) {
    sc::CharSum next(F, n);
    const sc::Template ft = factor_template(n, f);
    for (const auto& [t, m] : acc.terms()) next.add(sc::tensor_by_counting(F, t, ft), m);
    acc = next;
  }
  return acc;
}

int cmd_tensor(const RunConfig& cfg) {
  check_n(cfg);
  const sc::Field F = resolve_field(cfg);
  const auto caps = resolve_caps(cfg);
  const std::string fmt = pick_format(cfg, "json");
  if (cfg.factors.empty()) throw sc::ArgumentError("tensor needs at least one --factor i,j,a");
  std::vector<sc::PrimaryFactor> factors;
  for (const auto& s : cfg.factors) factors.push_back(parse_factor(F, s));

  if (!cfg.emit_golden.empty()) {
    for (const auto& f : factors) {
      if (f.i < 1 || f.j > cfg.n || f.i >= f.j) throw sc::ArgumentError("factor outside the strict upper triangle");
    }
    const sc::oracle::BruteTable brute(cfg.n, F, caps);
    std::vector<sc::Cyclotomic> prod(brute.cols().size(), sc::Cyclotomic(F.p(), sc::Rational(1)));
    for (const auto& f : factors) {
      const auto& row = brute.values()[brute.row_index(factor_template(cfg.n, f))];
      for (std::size_t c = 0; c < prod.size(); ++c) prod[c] = prod[c] * row[c];
    }
    sc::CharSum out(F, cfg.n);
    for (const auto& [t, m] : brute.decompose(prod)) out.add(t, m);
    emit(cfg, render(out, fmt));
    return 0;
  }

  const sc::CharSum result = sc::tensor_rewrite(F, cfg.n, factors);
  if (cfg.check) {
    const sc::CharSum counted = tensor_counting_fold(F, cfg.n, factors);
    if (counted != result) {
      std::cerr << "invariant violation: rewrite and counting paths disagree\n"
                << "rewrite:\n" << sc::io::tensor_text(result) << "counting:\n" << sc::io::tensor_text(counted);
      return kExitInvariant;
    }
    std::cerr << "check: rewrite and counting paths agree\n";
  }
  emit(cfg, render(result, fmt));
  return 0;
}

int cmd_discrete(const RunConfig& cfg) {
  check_n(cfg);
  const sc::Field F = resolve_field(cfg);
  const auto caps = resolve_caps(cfg);
  const std::string fmt = pick_format(cfg, "json");
  if (!cfg.emit_golden.empty()) {
    emit(cfg, render(sc::oracle::brute_delta_decomposition(sc::oracle::BruteTable(cfg.n, F, caps)), fmt));
    return 0;
  }
  emit(cfg, render(sc::delta_decompose(cfg.n, F, caps.group), fmt));
  return 0;
}

int cmd_count(const RunConfig& cfg) {
  if (cfg.n < 0) throw sc::ArgumentError("--n must be >= 0");
  const sc::Field F = resolve_field(cfg);
  const std::string fmt = pick_format(cfg, "text");
  std::vector<std::string> values;
  if (!cfg.emit_golden.empty()) {
    // Number of coadjoint orbits found by brute force; size 0 has one (empty) template.
    const auto caps = resolve_caps(cfg);
    for (int m = 0; m <= cfg.n; ++m) {
      values.push_back(m == 0 ? "1" : std::to_string(sc::oracle::decompose_dual(m, F, caps).representatives.size()));
    }
  } else {
    for (int m = 0; m <= cfg.n; ++m) values.push_back(sc::bell_poly(m, F.q()).str());
  }
  std::string out;
  if (fmt == "json") {
    out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ",\"" : "\"") + values[i] + "\"";
    out += "]\n";
  } else {
    const char sep = fmt == "csv" ? ',' : ' ';
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? std::string(1, sep) : "") + values[i];
    out += "\n";
  }
  emit(cfg, out);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  check_n(cfg);
  const sc::Field F = resolve_field(cfg);
  sc::CertifyOptions opt;
  opt.caps = resolve_caps(cfg);
  opt.jobs = cfg.jobs;
  opt.seed = cfg.seed;
  const sc::CertifyReport report = sc::certify(cfg.n, F, opt);
  emit(cfg, sc::format_report(report));
  if (!report.ok()) {
    for (const auto& c : report.checks) {
      for (const auto& f : c.failures) std::cerr << "invariant violation [" << c.key << "]: " << f << "\n";
    }
    return kExitInvariant;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercharacters of unitriangular groups over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string cap_orbit;
  std::string cap_group;

  app.add_option("--n", cfg.n, "matrix size");
  app.add_option("--p", cfg.p, "field characteristic");
  app.add_option("--k", cfg.k, "extension degree");
  app.add_option("--q", cfg.q, "prime field size (shorthand for --p q --k 1)");
  app.add_option("--format", cfg.format, "json, csv or text");
  app.add_option("--jobs", cfg.jobs, "worker threads (0: all cores)");
  app.add_option("--cap-orbit", cap_orbit, "maximum orbit or cluster size");
  app.add_option("--cap-group", cap_group, "maximum enumerated space size");
  app.add_option("--emit-golden", cfg.emit_golden, "write oracle-computed output to PATH");
  app.add_option("--seed", cfg.seed, "seed for sampled verification");

  auto* table = app.add_subcommand("table", "character table");
  auto* clusters = app.add_subcommand("clusters", "templates with their invariants");
  auto* tensor = app.add_subcommand("tensor", "tensor product of primary characters");
  tensor->add_option("--factor", cfg.factors, "primary factor i,j,a (repeatable)");
  tensor->add_flag("--check", cfg.check, "also run the counting path and compare");
  auto* discrete = app.add_subcommand("discrete", "discrete-series decomposition");
  auto* count = app.add_subcommand("count", "B(m,q) for m = 0..n");
  auto* verify = app.add_subcommand("verify", "certify every identity against the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (!cap_orbit.empty()) cfg.cap_orbit = parse_u64(cap_orbit, "--cap-orbit");
    if (!cap_group.empty()) cfg.cap_group = parse_u64(cap_group, "--cap-group");
    if (*table) return cmd_table(cfg);
    if (*clusters) return cmd_clusters(cfg);
    if (*tensor) return cmd_tensor(cfg);
    if (*discrete) return cmd_discrete(cfg);
    if (*count) return cmd_count(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const sc::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sc::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const sc::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
