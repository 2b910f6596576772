#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vndf::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name) and runs the chosen subcommand:
/// sample, pdf, validate, bench or furnace. CSV goes to `out` unless
/// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vndf::cli
