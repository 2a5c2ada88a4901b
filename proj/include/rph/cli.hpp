#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rph {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,     ///< bad arguments, malformed files, failed preconditions
    kExitResource = 2,  ///< simplex budget or index range exceeded
    kExitNetwork = 3,   ///< download failed; retrying may help
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// unless a subcommand writes a file; diagnostics go to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rph
