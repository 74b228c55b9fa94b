#pragma once

// Command-line front end. `run` is the whole program minus process plumbing, so tests can
// drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace hfsplit::cli {

enum ExitCode : int {
  kOk = 0,
  kFixtureMismatch = 1,
  kInvalidInput = 2,
  kNotStabilized = 3,
  kLimitReached = 4,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfsplit::cli
