#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symhorn::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;        // success, or the relation holds
inline constexpr int kNegative = 1;  // well-posed negative: relation fails, residual too large
inline constexpr int kError = 2;     // bad input or numerical failure

// Runs the command line `args` (without the program name). Artifacts go to
// --out when given, otherwise to `out` with the human-readable report moved to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symhorn::cli
