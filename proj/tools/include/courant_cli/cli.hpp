#pragma once

#include <string>
#include <vector>

namespace courant::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kSpecError = 2, kInternalError = 3 };

struct RunResult {
  int exit_code = kPass;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and captures its output.
RunResult run(const std::vector<std::string>& args);

}  // namespace courant::cli
