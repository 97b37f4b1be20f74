#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace descalg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs the tool with args[0] as the program name; results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descalg
