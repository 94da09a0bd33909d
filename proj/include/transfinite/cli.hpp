#pragma once

#include <string>
#include <vector>

namespace transfinite {

/// Result of one CLI invocation: exit code 0 on success, 1 on a domain
/// error, 2 on a parse/usage error; payload is the full stdout text.
struct CliResult {
  int exit_code;
  std::string payload;
};

/// Dispatches one command line (argv without the program name).
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace transfinite
