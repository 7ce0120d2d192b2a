#pragma once

#include <ostream>

namespace sympdec {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerificationFailed = 2,
  kExitResource = 3,
};

/// Entry point of the `sympdec` tool. `stdout_is_tty` selects the default
/// output format (table on a terminal, JSON otherwise).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            bool stdout_is_tty = false);

}  // namespace sympdec
