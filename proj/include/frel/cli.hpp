#ifndef FREL_CLI_HPP
#define FREL_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace frel {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;            // success; for `check`: consistent
inline constexpr int kExitInputError = 1;    // unreadable or invalid input
inline constexpr int kExitInconsistent = 2;  // `check` on an inconsistent system,
                                             // `verify` on a failed cross-check
inline constexpr int kExitNoSolvable = 3;    // `mcs` when no equation is solvable alone
inline constexpr int kExitUnsupported = 4;   // `enumerate` on a non-min system

/// Runs the command-line tool on `args` (program name excluded), writing
/// results to `out` and diagnostics to `err`. Never throws; every failure
/// is reported through the exit code.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace frel

#endif  // FREL_CLI_HPP
