#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freeman::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics and usage to `err`; `in` backs the "-" input and an empty
// input list.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace freeman::cli
