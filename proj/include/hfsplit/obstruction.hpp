#pragma once

// The additivity test: a rational homology sphere with H_1 = Z_{m1} + Z_{m2} that splits as a
// sum of pieces with prime-power homology has dbar(a,b) = dbar(a,0) + dbar(0,b). A nonzero
// defect therefore obstructs splitting; a vanishing table proves nothing.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hfsplit/lens_d.hpp"
#include "hfsplit/rational.hpp"
#include "hfsplit/table.hpp"

namespace hfsplit::obstruction {

/// L(m, n) with H_1 = Z_{m1} + Z_{m2}.
struct Lens {
  std::int64_t m = 0, n = 0, m1 = 0, m2 = 0;
  lens::Orientation orientation = lens::Orientation::reversed;
};
/// S^3_{pq}(T_{p,q}).
struct SurgeryTorus {
  std::int64_t p = 0, q = 0;
};
/// S^3_{pq}(T_{p,q} # D) with D the doubled-trefoil model.
struct SurgeryTorusDouble {
  std::int64_t p = 0, q = 0;
};
/// L(4r^2+1, 2r) split as 5 * (4r^2+1)/5; needs r = +-1 mod 5 and 25 not dividing 4r^2+1.
struct ChainLens {
  std::int64_t r = 0;
};

using ManifoldSpec = std::variant<Lens, SurgeryTorus, SurgeryTorusDouble, ChainLens>;

/// Short stable description, e.g. "lens 33 13 3 11".
std::string describe(const ManifoldSpec& spec);

enum class Verdict { no_obstruction, obstructed };

/// "no obstruction from this test" / "obstructed: does not split".
const char* to_string(Verdict v);

struct Witness {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Rational value;
  bool operator==(const Witness&) const = default;
};

struct ObstructionReport {
  std::string spec;
  std::string convention;  ///< orientation, label map and Spin structure used
  std::int64_t scale = 1;  ///< integer that clears the denominators of `dbar`
  LabeledTable dbar;
  LabeledTable defect;     ///< dbar(a,b) - dbar(a,0) - dbar(0,b)
  Verdict verdict = Verdict::no_obstruction;
  std::vector<Witness> witnesses;  ///< nonzero defect cells in table order
};

ObstructionReport defect_table(const ManifoldSpec& spec);

/// Every cell with a != 0 mod p, b != 0 mod q has negative defect on L(pq,1) (recursion
/// orientation), and the piecewise closed forms agree with the recursion there.
bool lens_family_negativity(std::int64_t p, std::int64_t q);

struct TwoTorsionReport {
  std::int64_t n = 0;
  std::int64_t r = 0;       ///< 5n + 1
  std::int64_t p = 0;       ///< 20n^2 + 8n + 1
  std::int64_t spin = 0;    ///< 2r^2 + r
  Rational by_recursion;    ///< d(p-5) - d(p) - d(-5) from the Spin structure
  Rational by_closed_form;  ///< the same with the chain-family closed form
  std::array<std::pair<std::int64_t, std::int64_t>, 3> labels{};  ///< (x, y) of the three labels
};

/// Three-term defect on L(4r^2+1, 2r) = L(5p, 2r) with r = 5n + 1.
TwoTorsionReport twotorsion_defect(std::int64_t n);

/// L(33,13) split as 3 * 11.
ObstructionReport concordance_example();

struct IndependenceEntry {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool certified = false;
};

/// Negativity certificate for each pair.
std::vector<IndependenceEntry> independence_suite(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);

}  // namespace hfsplit::obstruction
