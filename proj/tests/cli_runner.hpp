#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef COLLATZ_CLI_PATH
#error "COLLATZ_CLI_PATH must point at the CLI binary"
#endif

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI with `args` (shell syntax), capturing stdout; stderr is dropped.
inline Result run(const std::string& args) {
  std::string cmd = std::string(COLLATZ_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cli
