#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relinv::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or verification failed
inline constexpr int kExitUsage = 2;    // bad arguments, unreadable or malformed input

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relinv::cli
