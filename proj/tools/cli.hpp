#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace craigtab::cli {

enum ExitCode {
  kOk = 0,
  kNotProved = 1,
  kFailed = 2,  // requirement or verification failure, invalid structure
  kParseError = 3,
  kResourceLimit = 4,
};

// Runs the command line `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace craigtab::cli
