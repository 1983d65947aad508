#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indmatch::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kViolation = 1,
    kInputError = 2,
    kBudgetExceeded = 3,
};

/// Runs the command line `args` (without the program name). Input named "-"
/// is read from `in`; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace indmatch::cli
