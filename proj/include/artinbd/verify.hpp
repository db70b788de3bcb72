#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace artinbd {

struct VerifyOptions {
  int n = 0;      // 0 = suite default range
  int m = 0;      // rank 2 edge label, 0 = 3..6
  int len = 0;    // word length budget, 0 = suite default
  int count = 0;  // random sample size, 0 = suite default
  int cap = 0;    // closure universe bound, 0 = suite default
  std::uint64_t seed = 20240615;
  std::string rep;     // restrict to one action kind ("rhoB", ...)
  std::string flavor;  // restrict to one flavor ("B", "D", "K")
};

struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  long long checked = 0;
  std::vector<std::string> failures;
  double wall_ms = 0.0;
  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite; throws std::invalid_argument for an unknown suite id.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace artinbd
