#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlgf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidationFailure = 2,
  kNumericGuard = 3,
};

// args excludes the program name. JSON goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlgf::cli
