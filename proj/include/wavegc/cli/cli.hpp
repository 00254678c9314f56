#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavegc::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kUndecided = 3 };

// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavegc::cli
