#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rookdual::cli {

// Exit codes besides 0 (success) and CLI11's own parse codes.
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitSizeGuard = 3;

// Runs the command line `args` (without the program name). Results go to
// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rookdual::cli
