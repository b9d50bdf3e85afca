#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbern::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNonConvergence = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbern::cli
