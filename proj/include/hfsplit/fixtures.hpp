#pragma once

// Golden tables: the d-bar and defect charts and the surgery sequences, stored as CSV.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hfsplit/table.hpp"

namespace hfsplit::fixtures {

struct Fixture {
  std::string name;        ///< file stem, e.g. "t35_dbar"
  std::string spec;
  std::string convention;
  std::int64_t scale = 1;  ///< cells are stored multiplied by this
  std::string axes;        ///< header of the label column, "a\b" or "s"
  LabeledTable table;      ///< unscaled values
  bool operator==(const Fixture&) const = default;
};

/// Computes every fixture from scratch, in a fixed order.
std::vector<Fixture> compute_all();

std::string to_csv(const Fixture& f);
/// Inverse of to_csv; throws InvalidInput on malformed text.
Fixture parse_csv(std::string_view text);

/// $HFSPLIT_FIXTURE_DIR if set, otherwise the fixtures/ directory of the source tree.
std::filesystem::path default_dir();

/// Writes every fixture as <dir>/<name>.csv; returns the number written.
std::size_t regenerate(const std::filesystem::path& dir);

struct Mismatch {
  std::string fixture;
  std::string detail;  ///< e.g. "cell (a=1, b=2): stored 31, computed 32" or "missing file"
};

/// Compares stored fixtures with freshly computed ones.
std::vector<Mismatch> check(const std::filesystem::path& dir);

}  // namespace hfsplit::fixtures
