#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vtt::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kResourceCap = 3,
};

/// Runs the `vtt` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vtt::cli
