#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supercluster/gf.hpp"
#include "supercluster/oracle.hpp"

namespace supercluster {

struct CertifyOptions {
  oracle::Caps caps;
  int jobs = 1;
  std::uint64_t seed = 1;
  /// All unordered template pairs are checked when there are at most this
  /// many; otherwise `sampled_pairs` seeded random pairs.
  std::size_t exhaustive_pairs = 1500;
  std::size_t sampled_pairs = 200;
  /// Pairs with |cluster(t1)| |cluster(t2)| above this skip the counting path
  /// (the rewrite and brute-force paths still run).
  std::uint64_t counting_budget = std::uint64_t{1} << 22;
};

struct CheckResult {
  std::string key;
  std::string title;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool passed() const { return failures.empty(); }
};

struct CertifyReport {
  int n = 1;
  int q = 2;
  std::vector<CheckResult> checks{};
  bool ok() const;
  const CheckResult& at(const std::string& key) const;
};

/// Keys in report order.
const std::vector<std::string>& certify_keys();

/// Runs every certification check for U(n, F). Each fast-path result is
/// compared with the brute-force oracle. A falsified identity is recorded as
/// a failure; cap violations propagate as ResourceLimitError.
CertifyReport certify(int n, const Field& F, const CertifyOptions& options = {});

/// One line per key: "<key> PASS|FAIL <title> (<cases> cases)", followed by
/// indented failure lines.
std::string format_report(const CertifyReport& report);

}  // namespace supercluster
