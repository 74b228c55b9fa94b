#pragma once

// Alexander polynomials of torus knots, torsion coefficients and resultants.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hfsplit/rational.hpp"

namespace hfsplit::alexander {

/// a_0 + sum_{i>=1} a_i (t^i + t^-i), normalized so that the value at t = 1 is +1.
class SymmetricLaurentPoly {
 public:
  /// The unknot, Delta = 1.
  SymmetricLaurentPoly() : coeffs_{1} {}
  /// Throws InvalidInput if the top coefficient vanishes (genus > 0) or Delta(1) != 1.
  explicit SymmetricLaurentPoly(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  int genus() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k for any integer k (zero outside [-g, g]).
  std::int64_t at(int k) const;

  bool operator==(const SymmetricLaurentPoly&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Dense polynomial c_0 + c_1 t + ... with the top coefficient nonzero; empty means zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<std::int64_t> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt at(int k) const;

  bool operator==(const IntPoly&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

IntPoly operator*(const IntPoly& f, const IntPoly& g);

/// Quotient of an exact division; throws std::logic_error on a nonzero remainder.
IntPoly exact_divide(const IntPoly& num, const IntPoly& den);

/// Delta of T_{p,q} from (1 - t^pq)(1 - t) / ((1 - t^p)(1 - t^q)), centred at t^0.
/// Requires 2 <= p < q, gcd(p,q) = 1.
SymmetricLaurentPoly torus_alexander(std::int64_t p, std::int64_t q);

/// t_s = sum_{j>=1} j a_{s+j} for s = 0..g; the unknot gives {0}.
std::vector<std::int64_t> torsion_coeffs(const SymmetricLaurentPoly& poly);

/// Number of (x, y) with x, y >= 0 and xp + yq = i.
std::int64_t rep_count(std::int64_t p, std::int64_t q, std::int64_t i);

struct CoefficientReport {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> low_coeffs;  ///< a_0 .. a_{(p-1)/2}
  int sign_a0 = 0;
  bool unit_magnitudes = false;          ///< |a_i| = 1 for i <= (p-1)/2
  bool alternating = false;              ///< a_i = -a_{i-1} on the same range
  bool counts_regenerate = false;        ///< (1 - t) sum b_i t^i matches below degree 2g
  bool counts_alternate = false;         ///< b_i alternately 0, 1 for g-(p-1)/2 <= i <= g
  bool passed() const { return unit_magnitudes && alternating && counts_regenerate && counts_alternate; }
};

/// Coefficient check for T_{p,p+2}, p odd >= 3.
CoefficientReport check_low_coefficients(std::int64_t p);

/// Res(f, g) by the Euclidean scheme over the rationals. Throws InvalidInput on a zero input.
BigInt resultant(const IntPoly& f, const IntPoly& g);

}  // namespace hfsplit::alexander
