#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stanley::cli {

/// Exit statuses of the command-line frontend.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,  // parse errors, bad flags, wrong document kind
};

/// Runs one frontend invocation (args excludes the program name) and writes
/// results to the given streams. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stanley::cli
