#include "hfsplit/sieve.hpp"

#include <limits>
#include <string>

#include "hfsplit/errors.hpp"

namespace hfsplit::sieve {

namespace {

using u128 = unsigned __int128;

u128 to_u128(const BigInt& n) {
  u128 out = 0;
  const BigInt hi = n >> 64;
  const BigInt lo = n & BigInt(~std::uint64_t{0});
  out = static_cast<u128>(static_cast<std::uint64_t>(hi)) << 64;
  out |= static_cast<std::uint64_t>(lo);
  return out;
}

// Smallest b with b^3 >= n.
std::uint64_t cube_root_ceil(const BigInt& n) {
  BigInt lo = 0, hi = 1;
  while (hi * hi * hi < n) hi *= 2;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid >= n)
      hi = mid;
    else
      lo = mid + 1;
  }
  return static_cast<std::uint64_t>(lo);
}

bool is_square(const BigInt& n) {
  const BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

}  // namespace

bool is_squarefree(const BigInt& n) {
  if (n < 1) throw InvalidInput("is_squarefree: n must be positive");
  if (n >= (BigInt(1) << 126)) throw TooLarge("is_squarefree: input beyond 126 bits");
  const std::uint64_t bound = cube_root_ceil(n);
  if (bound > static_cast<std::uint64_t>(kMaxTrialDivisor))
    throw TooLarge("is_squarefree: trial division bound " + std::to_string(bound) + " too large");
  u128 m = to_u128(n);
  auto strip = [&m](std::uint64_t d) {
    if (m % d != 0) return true;
    m /= d;
    return m % d != 0;
  };
  if (!strip(2) || !strip(3) || !strip(5)) return false;
  // Wheel mod 30 over the remaining candidates.
  static constexpr std::uint64_t kGaps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t d = 7;
  for (int k = 0; d <= bound && static_cast<u128>(d) * d * d <= m; d += kGaps[k], k = (k + 1) % 8) {
    if (!strip(d)) return false;
    if (m == 1) return true;
  }
  // Every prime factor of m exceeds the cube root of n, so m is 1, q, qr or q^2.
  BigInt rest = static_cast<std::uint64_t>(m >> 64);
  rest <<= 64;
  rest += static_cast<std::uint64_t>(m);
  return !(rest > 1 && is_square(rest));
}

QuadraticSpec::QuadraticSpec(std::int64_t c2, std::int64_t c1, std::int64_t alpha)
    : c2_(c2), c1_(c1), alpha_(alpha) {
  if (c2 == 0) throw InvalidInput("QuadraticSpec: leading coefficient must be nonzero");
  if (c1 * c1 == 4 * c2) throw InvalidInput("QuadraticSpec: f is the square of a linear polynomial");
  if (alpha < 1) throw InvalidInput("QuadraticSpec: alpha must be positive");
}

BigInt QuadraticSpec::value(const BigInt& x) const {
  BigInt v = BigInt(c2_) * x * x + BigInt(c1_) * x + 1;
  return v < 0 ? BigInt(-v) : v;
}

std::vector<std::int64_t> multiplier_sequence(const QuadraticSpec& spec, int count, std::int64_t search_cap) {
  if (count < 1) throw InvalidInput("multiplier_sequence: count must be positive");
  if (search_cap < 1) throw InvalidInput("multiplier_sequence: search cap must be positive");
  std::vector<std::int64_t> out;
  BigInt product = 1;
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max());
  while (static_cast<int>(out.size()) < count) {
    bool found = false;
    for (std::int64_t n = 1; n <= search_cap; ++n) {
      const BigInt s = BigInt(spec.alpha()) * product * n;
      if (s > limit) throw TooLarge("multiplier_sequence: term leaves the 64-bit range");
      const BigInt f = spec.value(s);
      if (f == 0 || !is_squarefree(f)) continue;
      out.push_back(static_cast<std::int64_t>(s));
      product *= f;
      found = true;
      break;
    }
    if (!found) throw SearchExhausted("multiplier_sequence: no admissible multiplier up to the cap", out);
  }
  return out;
}

namespace {

template <class Value>
std::vector<std::int64_t> greedy(int count, std::int64_t first, std::int64_t step, std::int64_t search_cap,
                                 Value value, const char* what) {
  if (count < 1) throw InvalidInput(std::string(what) + ": count must be positive");
  std::vector<std::int64_t> out;
  std::vector<BigInt> taken;
  for (std::int64_t k = 0; k < search_cap && static_cast<int>(out.size()) < count; ++k) {
    const std::int64_t n = first + k * step;
    const BigInt v = value(n);
    if (!is_squarefree(v)) continue;
    bool coprime = true;
    for (const auto& t : taken)
      if (boost::multiprecision::gcd(t, v) != 1) {
        coprime = false;
        break;
      }
    if (!coprime) continue;
    out.push_back(n);
    taken.push_back(v);
  }
  if (static_cast<int>(out.size()) < count)
    throw SearchExhausted(std::string(what) + ": search cap reached", out);
  return out;
}

}  // namespace

std::vector<std::int64_t> family_twotorsion(int count, std::int64_t search_cap) {
  return greedy(count, 5, 5, search_cap, [](std::int64_t n) { return BigInt(20) * n * n + 8 * n + 1; },
                "family_twotorsion");
}

std::vector<std::int64_t> family_torus_pairs(int count, std::int64_t search_cap) {
  auto to_p = [](std::vector<std::int64_t> ns) {
    for (auto& n : ns) n -= 1;
    return ns;
  };
  try {
    return to_p(greedy(count, 4, 2, search_cap, [](std::int64_t n) { return BigInt(n) * n - 1; },
                       "family_torus_pairs"));
  } catch (const SearchExhausted& e) {
    throw SearchExhausted(e.what(), to_p(e.partial));
  }
}

}  // namespace hfsplit::sieve
