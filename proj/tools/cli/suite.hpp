#pragma once

// The verify-all grid: every identity and bound check over a parameter grid,
// run on a worker pool and reported in a fixed order.

#include <functional>
#include <string>
#include <vector>

#include "settings.hpp"

namespace dynatomic::cli {

enum class Outcome { Pass, Fail, Exhausted };

struct CheckResult {
  Outcome outcome = Outcome::Fail;
  std::string detail;
};

struct Check {
  std::string family;
  std::string params;
  std::function<CheckResult()> run;
};

struct Grid {
  std::vector<long> ds;
  long n_max = 0;
  long m_max = 0;
  std::vector<long> ps;
  /// Extended ranges used outside quick mode.
  bool full = false;
};

Grid quick_grid();
Grid full_grid();

std::vector<Check> build_suite(const Grid& grid, const Settings& s);

struct SuiteResult {
  std::string family;
  std::string params;
  CheckResult result;
};

std::vector<SuiteResult> run_suite(const std::vector<Check>& checks, unsigned threads);

}  // namespace dynatomic::cli
