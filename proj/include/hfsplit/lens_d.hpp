#pragma once

// d-invariants of lens spaces.
//
// Labels follow the recursion: Spin^c structures on L(m,n) are s_0..s_{m-1} and
//
//   D(m, n, i) = (mn - (2i + 1 - m - n)^2) / (4mn) - D(n, m mod n, i mod n),  D(1,0,0) = 0,
//
// where D(m,n,i) is the d-invariant of -L(m,n). `d_lens` is the d-invariant of L(m,n)
// itself, i.e. -D. Additivity defects of lens spaces are quoted in the literature for the
// recursion values D, so `delta_defect` and `delta_closed_form` work in that orientation.

#include <cstdint>
#include <optional>

#include "hfsplit/rational.hpp"

namespace hfsplit::lens {

/// Which of L(m,n), -L(m,n) a quantity refers to.
enum class Orientation {
  standard,  ///< d(L(m,n), s_i) = -D(m,n,i)
  reversed,  ///< d(-L(m,n), s_i) = D(m,n,i)
};

const char* to_string(Orientation o);

class LensSpace {
 public:
  /// Throws InvalidInput unless 0 < n < m and gcd(m,n) = 1 (L(1,0) = S^3 is also accepted).
  LensSpace(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  bool operator==(const LensSpace&) const = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

/// Spin^c label in [0, m), checked against the ambient lens space.
class SpincIndex {
 public:
  SpincIndex(const LensSpace& L, std::int64_t i);
  /// Reduces any integer into [0, m).
  static SpincIndex wrap(const LensSpace& L, std::int64_t i);
  std::int64_t value() const { return i_; }

 private:
  std::int64_t i_;
};

/// The recursion value D(m,n,i). Pure.
Rational big_d(std::int64_t m, std::int64_t n, std::int64_t i);

Rational d_lens(const LensSpace& L, SpincIndex i, Orientation o = Orientation::standard);

/// Closed form for d(L(4r^2+1, 2r), s_{2rx+y}) with 0 <= y < 2r, 0 <= 2rx+y < 4r^2+1.
Rational d_chain_closed(std::int64_t r, std::int64_t x, std::int64_t y);

/// Label of the unique Spin structure (m odd).
///
/// L(m,1) gives 0 and L(4r^2+1, 2r) gives 2r^2+r; otherwise the unique label whose d-value
/// is attained by no other label. Throws AmbiguousSpin when that test finds zero or several.
SpincIndex spin_index(const LensSpace& L);

/// Same as spin_index but returns nullopt instead of throwing.
std::optional<SpincIndex> try_spin_index(const LensSpace& L);

/// d(L, spin + offset) - d(L, spin).
Rational dbar(const LensSpace& L, std::int64_t offset, Orientation o = Orientation::standard);

/// Label of (a, b) in Z_{m1} + Z_{m2} = Z_m, namely a*m2 + b*m1 mod m.
std::int64_t split_label(std::int64_t m1, std::int64_t m2, std::int64_t a, std::int64_t b);

/// Additivity defect D(a,b) - D(a,0) - D(0,b) + D(0,0) of the recursion values, measured from
/// the Spin structure, with (a,b) placed at offset a*m2 + b*m1.
///
/// Requires m = m1*m2, gcd(m1,m2) = 1 and m odd.
Rational delta_defect(const LensSpace& L, std::int64_t m1, std::int64_t m2, std::int64_t a,
                      std::int64_t b, Orientation o = Orientation::reversed);

/// Piecewise closed form of delta_defect(L(pq,1), p, q, a, b) for 0 < a <= (p-1)/2,
/// 0 < |b| <= (q-1)/2:
///   b > 0             -> -2ab
///   b < 0, aq+bp > 0  -> -2b(a-p)
///   aq + bp < 0       -> -2a(b+q)
Rational delta_closed_form(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b);

}  // namespace hfsplit::lens
