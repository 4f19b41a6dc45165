#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace reach2::cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

// Runs `binary args` through the shell with `stdin_text` piped in; stderr is
// discarded.
inline Result run(const std::string& binary, const std::string& args,
                  const std::string& stdin_text = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto input = dir / ("reach2_cli_" + std::to_string(::getpid()) + ".in");
  {
    std::ofstream f(input);
    f << stdin_text;
  }
  const std::string command =
      "'" + binary + "' " + args + " < '" + input.string() + "' 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::filesystem::remove(input);
  return r;
}

inline std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("reach2_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace reach2::cli
