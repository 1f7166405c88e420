#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsv::cli {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

// Runs `qsv <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsv::cli
