#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdecomp::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kUsageError = 2,
    kBudgetError = 3,
};

/// Runs one command line; args[0] is the program name. Results go to `out`
/// as JSON (or graph6 for enumerate), diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdecomp::cli
