#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hadex::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one CLI invocation. `args` excludes the program name.
///
/// JSON results go to `out` followed by a newline; domain failures print a
/// {"error": ..., "witness": ...} object to `out` and return kDomainError;
/// usage and parse failures print to `err` and return kUsageError.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hadex::cli
