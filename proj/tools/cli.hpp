#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace z2c {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitUnsupported = 4,
  kExitBudget = 5,
};

/// Runs the tool on `args` (without the program name), writing to `out` and `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2c
