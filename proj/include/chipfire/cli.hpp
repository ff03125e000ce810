#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipfire {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // `check` said no, `verify` found a failure, no witness exists
  kExitUsage = 2,     // bad arguments, unreadable or malformed input
  kExitGuard = 3,     // an exhaustive computation hit its size guard
};

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipfire
