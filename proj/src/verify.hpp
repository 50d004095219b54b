// Verification suites: each one checks a specific algebraic property of the
// implementation against an independent computation (convolution oracle,
// closed combinatorial formula, or exhaustive small-parameter sweep) and
// reports pass/fail with the number of individual comparisons made.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace afs {

struct SuiteResult {
  std::string name;
  std::string property;  // one-line statement of what was checked
  bool pass = false;
  long long checks = 0;
  std::string detail;  // first failing instance, empty when pass
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20260816ULL;
  int n = 0;        // restrict sweeps to one rank when nonzero
  long long r = 0;  // restrict sweeps to one degree when nonzero
};

// stable list of suite names, in reporting order
const std::vector<std::string>& suite_names();

// run one suite by name (contract_error on unknown names)
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// run every suite in order
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace afs
