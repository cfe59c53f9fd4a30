#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehpath {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs one command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehpath
