#pragma once

#include <iosfwd>

namespace turan {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitPrecondition = 3,
  kExitInequality = 4,
  kExitNumeric = 5,
};

/// Entry point of the `turan` tool: subcommands analyze, oscillation, search,
/// verify, capacity. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace turan
