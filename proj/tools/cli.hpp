#pragma once

#include <string>
#include <vector>

namespace weylsnp::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kParseError = 3,
  kValidationError = 4,
  kMismatch = 5,
};

struct Result {
  int exit_code = kOk;
  std::string out;  // report (text or JSON)
  std::string err;  // diagnostics and usage text
};

/// Runs one command line (without the program name).
Result run(const std::vector<std::string>& args);

}  // namespace weylsnp::cli
