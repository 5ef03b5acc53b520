#ifndef RATDYN_CLI_HPP
#define RATDYN_CLI_HPP

#include <ostream>

namespace ratdyn {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitVerdict = 0,
  kExitOperational = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one command: a JSON report on `out`, diagnostics on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratdyn

#endif  // RATDYN_CLI_HPP
