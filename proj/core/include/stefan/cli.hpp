#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stefan::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitVerificationFailed = 4;

// Runs the command line given as argv-style arguments (program name
// excluded), writing normal output to `out` and diagnostics to `err`.
// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace stefan::cli
