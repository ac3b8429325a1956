#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crc {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitRefuted = 1, kExitInput = 2, kExitCapacity = 3, kExitViolation = 4 };

/// Runs one invocation; `args` excludes the program name. Reports go to `out`,
/// JSON error objects to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crc
