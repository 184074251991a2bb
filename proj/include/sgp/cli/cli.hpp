#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgp::cli {

/// Exit codes: 0 success, 1 a verified claim failed, 2 invalid input.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgp::cli
