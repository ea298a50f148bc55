#pragma once

#include <iosfwd>

namespace dengue {

/// Exit codes of the command-line frontend.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,  ///< a verification ran and did not pass
    kExitConfig = 2,       ///< configuration, domain or admissibility error
    kExitNumerical = 3,    ///< no front, stiffness, truncation, divergence
};

/// Runs one subcommand; errors end in a single `error code=N kind=K: message` line on err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dengue
