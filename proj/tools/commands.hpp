#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "problem_file.hpp"

namespace jacring::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOptions {
  std::string command;  // gb, hilbert, saturate, colon, jacobian, h0, linkage, verify
  std::vector<std::string> files;
  Overrides overrides;
  /// JSON output path; a directory when several files are given.
  std::optional<std::string> json_path;
  bool oracle = false;
  bool timings = false;
  int jobs = 1;
};

bool is_command(const std::string& name);

/// Runs one command on an already parsed problem. Text goes to `out`; when
/// `json` is non-null the machine-readable document is stored there.
int run_on_problem(const std::string& command, const Problem& problem, const CommandOptions& options,
                   std::ostream& out, std::ostream& err, std::string* json);

/// Loads every file and runs the command, up to `jobs` files at a time. Output
/// for each file is printed in argument order. Returns the largest exit code.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace jacring::tools
