#pragma once

// Tables of rationals indexed by (a, b) labels in Z_{m1} + Z_{m2}.

#include <cstdint>
#include <vector>

#include "hfsplit/rational.hpp"

namespace hfsplit {

struct LabeledTable {
  std::vector<std::int64_t> row_labels;  ///< values of a, top to bottom
  std::vector<std::int64_t> col_labels;  ///< values of b, left to right
  std::vector<std::vector<Rational>> cells;

  /// Cell at labels (a, b); throws std::out_of_range for an absent label.
  const Rational& at(std::int64_t a, std::int64_t b) const;
  /// Every cell multiplied by k.
  LabeledTable scaled(const Rational& k) const;
  bool operator==(const LabeledTable&) const = default;
};

/// (m-1)/2, ..., -(m-1)/2 for odd m (descending = true) or the reverse.
std::vector<std::int64_t> centred_labels(std::int64_t m, bool descending);

/// Representative of x mod m in [-(m-1)/2, (m-1)/2], m odd.
std::int64_t centred_residue(std::int64_t x, std::int64_t m);

}  // namespace hfsplit
