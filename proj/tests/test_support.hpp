#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// helpers shared by the end-to-end and acceptance drivers

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::filesystem::path test_scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("scgeo_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::string scratch_file(const std::string& name) {
  static int counter = 0;
  return (test_scratch_dir() / (std::to_string(counter++) + "_" + name)).string();
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// run a shell command, capturing stdout/stderr and the exit code
inline CommandResult run_command(const std::string& cmd_line) {
  CommandResult r;
  const std::string out_path = scratch_file("stdout"), err_path = scratch_file("stderr");
  const std::string full = cmd_line + " > " + out_path + " 2> " + err_path;
  const int status = std::system(full.c_str());
  if (status != -1 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

// structural equality with numbers compared at a relative/absolute tolerance
inline bool json_close(const nlohmann::json& a, const nlohmann::json& b, double tol,
                       std::string& why, const std::string& path = "$") {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    if (std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)})) return true;
    why = path + ": " + std::to_string(x) + " vs " + std::to_string(y);
    return false;
  }
  if (a.type() != b.type()) {
    why = path + ": type mismatch";
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      why = path + ": key count " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
      return false;
    }
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) {
        why = path + ": missing key " + it.key();
        return false;
      }
      if (!json_close(it.value(), b.at(it.key()), tol, why, path + "." + it.key())) return false;
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      why = path + ": array size " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
      return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!json_close(a[k], b[k], tol, why, path + "[" + std::to_string(k) + "]")) return false;
    return true;
  }
  if (a != b) {
    why = path + ": value mismatch";
    return false;
  }
  return true;
}
