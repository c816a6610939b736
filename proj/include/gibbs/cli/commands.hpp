#pragma once

#include <iosfwd>

#include "gibbs/cli/experiment_config.hpp"

namespace gibbs::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitConfigError = 2,
  kExitIterationCap = 3,
};

/// Draws one sample; writes <out>.csv and <out>.svg.
int cmd_sample(const ExperimentConfig& config, std::ostream& log);
/// Mean-iteration sweep over K for every (kappa0, gamma); writes <out>.csv and
/// <out>.svg. Rows finished before an iteration-cap failure are still written.
int cmd_sweep(const ExperimentConfig& config, std::ostream& log);
/// Oracle-equivalence suite; prints one PASS/FAIL line per check.
int cmd_validate(const ExperimentConfig& config, std::ostream& log);

/// Full command-line entry point: parses flags and an optional config file,
/// dispatches, and maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gibbs::cli
