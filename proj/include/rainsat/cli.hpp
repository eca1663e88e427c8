#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainsat {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one subcommand; args excludes the program name. The JSON report (or
/// the requested graph format) goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainsat
