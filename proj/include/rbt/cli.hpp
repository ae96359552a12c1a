#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbt::cli {

enum ExitCode { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Run the command line `args` (without the program name). Returns the exit
/// code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbt::cli
