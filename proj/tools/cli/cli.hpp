#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubulate::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_malformed = 1,
  exit_defects = 2,
  exit_usage = 64,
};

// Parses argv (argv[0] is the program name), runs one subcommand and writes
// the JSON report to --out or to `out`. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubulate::cli
