#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace overpart::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kVerificationFailed = 2;

/// Runs the command line `args` (args[0] is the program name). Regular output
/// goes to `out` (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overpart::cli
