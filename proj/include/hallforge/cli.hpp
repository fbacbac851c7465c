#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hallforge::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,       // archeck mismatch, unexpected internal error
    kUsage = 2,         // parse errors and invalid input
    kBudget = 3,        // BudgetExceeded
    kUndecidable = 4,   // Undecidable, NotInCatalog
    kFalsified = 5,     // a ValidationFailed triple
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hallforge::cli
