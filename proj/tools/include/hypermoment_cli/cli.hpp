#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermoment::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  usage = 2,
  inconclusive = 3,
};

// Runs one command line (without the program name). The JSON report goes
// to `out`, or to the --out file with a one-line summary on `out`.
// Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermoment::cli
