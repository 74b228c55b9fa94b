#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfsplit {

/// Caller supplied parameters outside an operation's domain.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// No family rule applies and the d-value uniqueness test is inconclusive.
struct AmbiguousSpin : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed the configured size bound.
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAMetabolizer : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotStaircase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Homology truncation did not settle within the window cap.
struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A number-theoretic search hit its cap; `partial` holds what was found.
struct SearchExhausted : std::runtime_error {
  SearchExhausted(const std::string& what, std::vector<std::int64_t> found)
      : std::runtime_error(what), partial(std::move(found)) {}
  std::vector<std::int64_t> partial;
};

}  // namespace hfsplit
