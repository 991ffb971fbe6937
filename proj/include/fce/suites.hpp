#pragma once

#include <cstdint>

#include "fce/fixtures.hpp"

namespace fce {

struct CheckReport {
  std::string check;
  std::string inputs;  // hex digest of the inputs
  bool pass = false;
  std::vector<std::pair<std::string, int>> carriers;  // labeled cardinalities
  std::string counterexample;                         // first failure, empty when passing
  double wall_ms = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 17;
  long long cap = 0;  // 0 keeps library defaults
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
// reports sorted by check name; a suite seeds its own generator, so a suite
// run inside `all` is byte-identical to the same suite run alone
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opt = {});

std::uint64_t fnv1a(const std::string& s);
std::string hex64(std::uint64_t v);

}  // namespace fce
