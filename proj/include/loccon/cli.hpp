#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loccon {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInvalid = 2,
  kExitFailure = 3,
  kExitUndetermined = 4,
};

/// args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loccon
