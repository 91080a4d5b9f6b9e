#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace astopo::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1, // e.g. InsufficientNodes, NoMissingLinks
    kUsageError = 2,  // bad flags, unreadable input, parse failure, invalid parameters
};

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace astopo::cli
