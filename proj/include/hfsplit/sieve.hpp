#pragma once

// Square-free, pairwise coprime values of quadratic polynomials.

#include <cstdint>
#include <vector>

#include "hfsplit/rational.hpp"

namespace hfsplit::sieve {

/// Exact square-freeness test. Trial division by integers up to the cube root, then a perfect
/// square test on the cofactor. Throws InvalidInput for n < 1 and TooLarge when the cube root
/// exceeds `kMaxTrialDivisor`.
bool is_squarefree(const BigInt& n);

inline constexpr std::int64_t kMaxTrialDivisor = 400'000'000;

/// f(x) = c2 x^2 + c1 x + 1 together with the progression multiplier alpha.
class QuadraticSpec {
 public:
  /// Throws InvalidInput if f is the square of a linear polynomial (c1^2 = 4 c2) or alpha < 1.
  QuadraticSpec(std::int64_t c2, std::int64_t c1, std::int64_t alpha);

  std::int64_t c2() const { return c2_; }
  std::int64_t c1() const { return c1_; }
  std::int64_t alpha() const { return alpha_; }
  /// |f(x)|; the sign of f is irrelevant to square-freeness and coprimality.
  BigInt value(const BigInt& x) const;

 private:
  std::int64_t c2_;
  std::int64_t c1_;
  std::int64_t alpha_;
};

/// s_k = alpha * P * n_k with P = f(s_1) ... f(s_{k-1}) and n_k >= 1 the least value (up to
/// `search_cap`) for which f(s_k) is square-free. Throws SearchExhausted with the terms found
/// so far, or TooLarge once s_k leaves the 64-bit range.
std::vector<std::int64_t> multiplier_sequence(const QuadraticSpec& spec, int count, std::int64_t search_cap);

/// Smallest n = 5, 10, 15, ... whose values 20n^2 + 8n + 1 are square-free and pairwise coprime.
std::vector<std::int64_t> family_twotorsion(int count, std::int64_t search_cap = 1'000'000);

/// Odd p = n - 1 (n = 4, 6, 8, ...) such that all of p, p + 2 over the sequence are
/// square-free and pairwise coprime.
std::vector<std::int64_t> family_torus_pairs(int count, std::int64_t search_cap = 1'000'000);

}  // namespace hfsplit::sieve
