#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plwzw::app {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kTolerance = 1,
  kUsage = 2,
  kDomain = 3,
  kIo = 4,
};

/// Parsed and validated options shared by every subcommand.
struct RunConfig {
  std::string command;
  int n = 2;
  int modes = 2;
  std::vector<double> eps;
  unsigned long long seed = 42;
  double tol = 0.0; ///< 0 selects the per-suite default
  int grid = 0;     ///< 0 selects the automatic grid size
  std::string out;
  std::string suite = "all";
  std::string mode = "birkhoff";
  std::string input;
  std::string kind = "phase";
  double amplitude = 0.1;
  int count = 20;
  std::vector<int> m_scan;
  double sigma = 0.4;
  double sigma_prime = 1.7;
};

/// Config echo written at the top of every text report, one "# key = value" per line.
std::string config_header(const RunConfig& cfg);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plwzw::app
