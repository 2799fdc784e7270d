#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensurg::cli {

/// Process exit statuses, one per failure class.
enum ExitCode : int {
  ok = 0,
  usage = 1,
  invalid_input = 2,
  precondition = 3,
  missing_knot = 4,
  census_failed = 5,
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensurg::cli
