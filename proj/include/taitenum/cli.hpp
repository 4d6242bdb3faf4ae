#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taitenum::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidGraph = 2,
    kInternal = 3,
};

// Runs one `taitenum` subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace taitenum::cli
