#ifndef POSTTAG_TOOLS_CLI_HPP
#define POSTTAG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace posttag::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBudgetExhausted = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace posttag::cli

#endif // POSTTAG_TOOLS_CLI_HPP
