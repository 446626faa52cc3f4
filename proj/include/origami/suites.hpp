#pragma once

// Named verification suites behind the CLI: each one runs a family of exact
// checks and returns a machine-readable report.  Given the same suite, seed,
// and configuration the report is deterministic (elapsed time aside),
// independent of the thread count.

#include <cstdint>
#include <string>
#include <vector>

#include "origami/dyson.hpp"
#include "origami/partitions.hpp"

namespace origami {

struct RunConfig {
  std::string suite;
  RankVector ranks;        // honored when ranks_given, else suite defaults
  bool ranks_given = false;
  int nmax = -1;           // negative = suite default
  int qorder = -1;         // negative = suite default
  std::uint64_t seed = 7;
  int trials = 3;
  int threads = 0;         // 0 = hardware concurrency
  XMode xmode = XMode::First;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string lhs;  // value computed by the engine
  std::string rhs;  // value it is compared against (empty for predicates)
};

struct Report {
  std::string suite;
  std::string ranks;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  bool all_pass() const;
};

// Canonical suite order; a nonzero process exit code is the 1-based position
// of the first failing suite.
const std::vector<std::string>& suite_names();
int suite_index(const std::string& name);  // throws std::invalid_argument

// Runs one suite.  Configuration problems (bad ranks for the suite, no
// pole-free point) surface as failing checks, not exceptions.
Report run_suite(const RunConfig& cfg);

}  // namespace origami
