#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace acadpop::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

/// Runs one acadpop invocation; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acadpop::cli
