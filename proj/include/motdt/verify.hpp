#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace motdt {

struct CheckResult {
  std::string suite;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  long max_d = 8;
  int order = 8;
  std::string cusp_file;  // empty: the shipped data directory
  int lambda_samples = 200;
  int series_samples = 50;
  int progression_samples = 50;
};

// core, lambda, series, progression, wallcross, resolution, milnor, dt, all
const std::vector<std::string>& suite_names();

// Throws invalid-argument for an unknown suite. Checks that throw are
// reported as failures with the error text.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

std::string default_data_dir();

}  // namespace motdt
