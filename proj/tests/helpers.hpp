#pragma once

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "dynn/coords.hpp"
#include "dynn/random.hpp"

namespace testutil {

inline const char* kGoldenText = "-1,-2,-2,1;-1,2,-2,2";

inline dynn::DynnikovCoordinates golden() {
  return dynn::DynnikovCoordinates::parse(kGoldenText);
}

inline dynn::DynnikovCoordinates coords(const char* text) {
  return dynn::DynnikovCoordinates::parse(text);
}

inline dynn::ExtendedCoordinates ext(std::vector<std::int64_t> a,
                                     std::vector<std::int64_t> b) {
  return dynn::ExtendedCoordinates{std::move(a), std::move(b)};
}

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the built CLI through the shell, capturing stdout; stderr is dropped.
inline CliResult run_cli(const std::string& args,
                         const std::string& stdin_text = "") {
  std::string cmd;
  if (!stdin_text.empty()) {
    cmd = "printf '%s' '" + stdin_text + "' | ";
  }
  cmd += std::string(DYNN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace testutil
