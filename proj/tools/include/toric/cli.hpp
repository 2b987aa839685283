#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitIndeterminate = 2,
  kExitNoCommonTail = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and machine-readable errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
