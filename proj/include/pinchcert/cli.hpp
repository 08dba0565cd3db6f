#ifndef PINCHCERT_CLI_HPP
#define PINCHCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pinch {

/// Exit codes shared by every verb.
enum ExitCode : int { kExitVerified = 0, kExitFalsified = 1, kExitInconclusive = 2, kExitUsage = 3 };

/// Runs one command line (args[0] is the program name). Reports go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pinch

#endif  // PINCHCERT_CLI_HPP
