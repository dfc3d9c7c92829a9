#pragma once

#include "app.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plwzw::app {

/// One CSV line of a verification report.
struct SuiteRow {
  std::string test_id;
  int n = 0;
  int M = 0;
  std::optional<double> eps;
  unsigned long long seed = 0;
  std::optional<std::vector<double>> sigmas;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;
  /// (eps, worst residual) pairs of the limit scan, empty for other suites.
  std::vector<std::pair<double, double>> limit_scan;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cybe", "dybe", "jacobi", "limits", "duality", "roundtrip", "all"};
  return names;
}

/// Runs one suite (or all of them) over cfg.count seeded instances.
SuiteResult run_suite(const RunConfig& cfg);

std::string csv_header();
std::string csv_line(const SuiteRow& row);

} // namespace plwzw::app
