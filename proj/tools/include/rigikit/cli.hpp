#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigikit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kInputError = 2,
  kNotAll = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigikit::cli
