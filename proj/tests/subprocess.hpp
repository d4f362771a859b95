#ifndef ARGMAT_TESTS_SUBPROCESS_HPP
#define ARGMAT_TESTS_SUBPROCESS_HPP

// Tiny popen wrapper for driving the CLI binary from tests. Stderr is folded
// into the captured output so diagnostics can be asserted on, too.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testutil {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr, interleaved
};

inline RunResult run_command(const std::string& command) {
  RunResult result;
  std::string wrapped = command + " 2>&1";
  std::FILE* pipe = ::popen(wrapped.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = ::pclose(pipe);
  if (WIFEXITED(status))
    result.exit_code = WEXITSTATUS(status);
  else
    result.exit_code = -1;
  return result;
}

}  // namespace testutil

#endif
