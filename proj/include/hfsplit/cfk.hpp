#pragma once

// Doubly filtered complexes over F_2[U, U^-1] and d-invariants of large surgeries.
//
// A generator x is stored at its U^0 position (alg_i, alex_j) with Maslov grading `grading`;
// U^k x sits at (alg_i - k, alex_j - k) with grading `grading - 2k`. The differential is
// U-equivariant, so it is stored on generators only: an arrow x -> (y, u) contributes U^u y.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hfsplit/alexander.hpp"
#include "hfsplit/rational.hpp"
#include "hfsplit/table.hpp"

namespace hfsplit::cfk {

struct FilteredGenerator {
  std::string name;
  int alg_i = 0;
  int alex_j = 0;
  int grading = 0;
  bool operator==(const FilteredGenerator&) const = default;
};

struct Arrow {
  std::size_t target = 0;
  int u_power = 0;
  bool operator==(const Arrow&) const = default;
};

class FilteredComplex {
 public:
  FilteredComplex() = default;
  /// `differential[x]` lists the arrows out of generator x. Throws InvalidInput unless the
  /// differential squares to zero, lowers grading by one and respects both filtrations.
  FilteredComplex(std::vector<FilteredGenerator> generators, std::vector<std::vector<Arrow>> differential);

  const std::vector<FilteredGenerator>& generators() const { return gens_; }
  const std::vector<std::vector<Arrow>>& differential() const { return diff_; }
  std::size_t size() const { return gens_.size(); }
  /// Half the spread of alex_j - alg_i over the generators; the genus for a knot.
  int genus() const;

  bool operator==(const FilteredComplex&) const = default;

 private:
  std::vector<FilteredGenerator> gens_;
  std::vector<std::vector<Arrow>> diff_;
};

/// Staircase of an L-space knot: top generator at (0, g) in grading 0, then alternately a
/// generator of grading 1 shifted right and a generator of grading 0 shifted down by the gaps
/// between consecutive exponents of Delta. Throws NotStaircase unless the nonzero coefficients
/// are +-1, alternate, and start with +1 at t^g.
FilteredComplex staircase(const alexander::SymmetricLaurentPoly& poly);

/// Model for the Whitehead double of the trefoil: the trefoil staircase.
FilteredComplex double_model();

/// Tensor product over F_2[U, U^-1]; generators ordered (x_0 y_0, x_0 y_1, ...).
FilteredComplex tensor(const FilteredComplex& c1, const FilteredComplex& c2);

struct TruncationPolicy {
  int extra = 4;      ///< window W = 2g + |s| + extra
  int step = 4;       ///< stability is checked at W and W + step
  int max_growth = 64;  ///< give up (NotStabilized) once W has grown by this much
};

/// Bottom grading of the U-tower in H_*(C / C{i < 0, j < s}).
int tilde_d(const FilteredComplex& c, int s, const TruncationPolicy& policy = {});

/// Grading shift (-(2s - n)^2 + n) / (4n).
Rational eta(std::int64_t n, std::int64_t s);

/// d(S^3_n(K), s) = tilde_d - eta. Requires n odd, |s| <= (n-1)/2, n >= 2g - 1.
Rational d_surgery(const FilteredComplex& c, std::int64_t n, std::int64_t s);

/// d(S^3_n(K), s(a,b)) - d(S^3_n(K), 0) with s(a,b) = a*m2 + b*m1 reduced into
/// [-(n-1)/2, (n-1)/2]. Rows a run from (m1-1)/2 down, columns b from -(m2-1)/2 up.
LabeledTable dbar_surgery_table(const FilteredComplex& c, std::int64_t n, std::int64_t m1, std::int64_t m2);

/// tilde_d(T_{p,p+2}, s) - tilde_d(T_{p,p+2} # D, s) for s = 1 and s = 0 (in that order).
std::array<int, 2> pq_torus_difference(std::int64_t p);

}  // namespace hfsplit::cfk
