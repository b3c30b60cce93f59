#pragma once

// Helper for driving the command-line binary from tests: runs it with the
// given arguments, captures combined stdout/stderr, and reports the exit code.

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace fvec::testing {

struct CliResult {
  int exit_code = -1;
  std::string output;  // combined stdout and stderr
};

#ifdef FVEC_CLI_PATH
inline CliResult run_cli(const std::string& args) {
  const std::string command = std::string(FVEC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("failed to launch CLI: " + command);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}
#endif

#ifdef FVEC_DATA_DIR
inline std::string data_file(const std::string& name) {
  return std::string(FVEC_DATA_DIR) + "/" + name;
}
#endif

}  // namespace fvec::testing
