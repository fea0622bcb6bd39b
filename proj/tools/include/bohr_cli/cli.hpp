#ifndef BOHR_CLI_CLI_HPP
#define BOHR_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNoRoot = 2;
inline constexpr int kExitFailure = 3;

/// Runs the command line `bohr <args...>` (args exclude the program name).
/// Results go to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// 12 significant digits, '.' decimal point regardless of locale.
std::string format_number(double x);

}  // namespace bohr::cli

#endif  // BOHR_CLI_CLI_HPP
