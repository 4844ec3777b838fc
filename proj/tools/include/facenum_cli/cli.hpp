#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facenum::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsage = 2,
};

// Runs one command line (args exclude the program name). Reports go to
// `out` unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facenum::cli
