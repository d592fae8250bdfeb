#pragma once

#include <iosfwd>

namespace bachet::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kClaimViolation = 1,
  kUsageError = 2,
  kUnverified = 3,
};

/// Runs one invocation (argv[0] is the program name). Report output goes to
/// out unless --out is given; diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bachet::cli
