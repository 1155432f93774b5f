#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hsum/lab/config.hpp"
#include "hsum/lab/report.hpp"

namespace hsum::lab {

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 invariant failure
  std::vector<SuiteSummary> summaries;
};

/// Runs one suite, or every suite for "all", writing <suite>.csv files and
/// summary.json into cfg.output_dir.  Progress lines go to `log`.
/// Unknown names throw std::invalid_argument.
RunResult run_suite(const ExperimentConfig& cfg, const std::string& suite, std::ostream& log);

}  // namespace hsum::lab
