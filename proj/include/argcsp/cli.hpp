#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace argcsp {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInput = 3,
  kExitIncomplete = 4,
};

/// Runs the `argcsp` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argcsp
