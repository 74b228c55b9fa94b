#include "hfsplit/table.hpp"

#include <algorithm>
#include <stdexcept>

#include "hfsplit/errors.hpp"

namespace hfsplit {

const Rational& LabeledTable::at(std::int64_t a, std::int64_t b) const {
  const auto r = std::find(row_labels.begin(), row_labels.end(), a);
  const auto c = std::find(col_labels.begin(), col_labels.end(), b);
  if (r == row_labels.end() || c == col_labels.end()) throw std::out_of_range("no such table label");
  return cells[static_cast<std::size_t>(r - row_labels.begin())][static_cast<std::size_t>(c - col_labels.begin())];
}

LabeledTable LabeledTable::scaled(const Rational& k) const {
  LabeledTable out = *this;
  for (auto& row : out.cells)
    for (auto& v : row) v *= k;
  return out;
}

std::vector<std::int64_t> centred_labels(std::int64_t m, bool descending) {
  if (m < 1 || m % 2 == 0) throw InvalidInput("centred labels need an odd modulus");
  const std::int64_t h = (m - 1) / 2;
  std::vector<std::int64_t> out;
  for (std::int64_t x = -h; x <= h; ++x) out.push_back(x);
  if (descending) std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t centred_residue(std::int64_t x, std::int64_t m) {
  if (m < 1 || m % 2 == 0) throw InvalidInput("centred residue needs an odd modulus");
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return r > (m - 1) / 2 ? r - m : r;
}

}  // namespace hfsplit
