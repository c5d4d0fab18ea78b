#ifndef RCNOT_TOOLS_CLI_HPP
#define RCNOT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rcnot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 1;

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcnot::cli

#endif  // RCNOT_TOOLS_CLI_HPP
