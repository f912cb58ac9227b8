#ifndef BGROVER_CLI_COMMANDS_HPP
#define BGROVER_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bgrover::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInfeasible = 3,
};

/// Runs the bgrover command line. `args` excludes the program name.
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgrover::cli

#endif  // BGROVER_CLI_COMMANDS_HPP
