#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "hfsplit/errors.hpp"
#include "hfsplit/lens_d.hpp"
#include "oracles.hpp"

using namespace hfsplit;
using namespace hfsplit::lens;

TEST_CASE("big_d base and small values") {
  CHECK(big_d(1, 0, 0) == 0);
  CHECK(big_d(15, 1, 0) == Rational(-7, 2));
  CHECK(big_d(5, 2, 0) == Rational(-2, 5));
}

TEST_CASE("big_d rejects bad input") {
  CHECK_THROWS_AS(big_d(4, 2, 0), InvalidInput);
  CHECK_THROWS_AS(big_d(5, 2, 5), InvalidInput);
  CHECK_THROWS_AS(big_d(5, 2, -1), InvalidInput);
  CHECK_THROWS_AS(big_d(0, 0, 0), InvalidInput);
  CHECK_THROWS_AS(big_d(-3, 1, 0), InvalidInput);
  CHECK_THROWS_AS(LensSpace(4, 2), InvalidInput);
  CHECK_THROWS_AS(LensSpace(5, 5), InvalidInput);
}

TEST_CASE("big_d agrees with a plain recursive transcription") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 300);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % (m - 1));
    if (std::gcd(m, n) != 1) continue;
    const std::int64_t i = static_cast<std::int64_t>(rng() % m);
    CHECK(big_d(m, n, i) == oracle::lens_recursion(m, n, i));
  }
}

TEST_CASE("closed form on L(pq,1)") {
  for (std::int64_t p = 1; p <= 50; p += 2)
    for (std::int64_t q = 1; q <= 50; q += 2) {
      if (std::gcd(p, q) != 1 || p * q < 2) continue;
      const std::int64_t m = p * q;
      for (std::int64_t i = 0; i < m; ++i)
        REQUIRE(4 * m * big_d(m, 1, i) == Rational(-4 * i * i + 4 * m * i + m * (1 - m)));
    }
}

TEST_CASE("d_lens orientation") {
  CHECK(d_lens(LensSpace(5, 2), SpincIndex(LensSpace(5, 2), 0)) == Rational(2, 5));
  for (std::int64_t m = 2; m < 40; ++m) {
    const LensSpace L(m, 1);
    CHECK(d_lens(L, SpincIndex(L, 0)) == Rational(m - 1, 4));
    CHECK(d_lens(L, SpincIndex(L, 0), Orientation::reversed) == Rational(1 - m, 4));
  }
  const LensSpace L(65, 8);
  CHECK(d_lens(L, SpincIndex(L, 36)) == 0);
}

TEST_CASE("chain family closed form") {
  for (std::int64_t r = 1; r <= 20; ++r) CHECK(d_chain_closed(r, r, r) == 0);
  CHECK(d_chain_closed(1, 0, 0) == Rational(2, 5));
  for (std::int64_t r = 1; r <= 8; ++r) {
    const std::int64_t m = 4 * r * r + 1;
    const LensSpace L(m, 2 * r);
    for (std::int64_t label = 0; label < m; ++label)
      REQUIRE(d_chain_closed(r, label / (2 * r), label % (2 * r)) == d_lens(L, SpincIndex(L, label)));
    // zero only at x = y = r
    for (std::int64_t label = 0; label < m; ++label)
      if (d_chain_closed(r, label / (2 * r), label % (2 * r)) == 0) CHECK(label == 2 * r * r + r);
  }
  CHECK_THROWS_AS(d_chain_closed(2, 0, 4), InvalidInput);
  CHECK_THROWS_AS(d_chain_closed(2, 5, 0), InvalidInput);
  CHECK_THROWS_AS(d_chain_closed(2, -1, 0), InvalidInput);
}

TEST_CASE("spin index") {
  CHECK(spin_index(LensSpace(15, 1)).value() == 0);
  CHECK(spin_index(LensSpace(65, 8)).value() == 36);
  CHECK(spin_index(LensSpace(33, 13)).value() == 6);
  for (std::int64_t r = 1; r <= 10; ++r) {
    const LensSpace L(4 * r * r + 1, 2 * r);
    const auto s = spin_index(L);
    CHECK(s.value() == 2 * r * r + r);
    CHECK(d_lens(L, s) == 0);
  }
  CHECK_THROWS_AS(spin_index(LensSpace(9, 2)), AmbiguousSpin);
  CHECK_FALSE(try_spin_index(LensSpace(9, 2)).has_value());
  CHECK_THROWS_AS(spin_index(LensSpace(8, 3)), InvalidInput);
}

TEST_CASE("the uniqueness heuristic agrees with the family rules") {
  for (std::int64_t r = 1; r <= 6; ++r) {
    const std::int64_t m = 4 * r * r + 1;
    std::map<Rational, int> counts;
    for (std::int64_t i = 0; i < m; ++i) ++counts[big_d(m, 2 * r, i)];
    CHECK(counts[big_d(m, 2 * r, 2 * r * r + r)] == 1);
  }
  for (std::int64_t m = 3; m < 60; m += 2) {
    std::map<Rational, int> counts;
    for (std::int64_t i = 0; i < m; ++i) ++counts[big_d(m, 1, i)];
    CHECK(counts[big_d(m, 1, 0)] == 1);
  }
}

TEST_CASE("dbar symmetry and multiset pairing") {
  for (std::int64_t m = 3; m < 100; m += 2)
    for (std::int64_t n = 1; n < m; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const LensSpace L(m, n);
      const auto spin = try_spin_index(L);
      if (!spin) continue;
      auto at = [&](std::int64_t o) { return d_lens(L, SpincIndex::wrap(L, spin->value() + o)); };
      std::map<Rational, int> counts;
      for (std::int64_t o = 1; o < m; ++o) {
        REQUIRE(at(o) == at(-o));
        ++counts[at(o)];
      }
      for (const auto& [v, c] : counts) CHECK(c % 2 == 0);
    }
}

TEST_CASE("dbar is relative to the Spin structure") {
  const LensSpace L(65, 8);
  CHECK(dbar(L, 0) == 0);
  CHECK(dbar(L, 5) == d_lens(L, SpincIndex(L, 41)) - d_lens(L, SpincIndex(L, 36)));
  CHECK(dbar(L, -1, Orientation::reversed) == -dbar(L, -1));
}

TEST_CASE("split labels") {
  CHECK(split_label(3, 5, 1, 1) == 8);
  CHECK(split_label(3, 5, -1, 0) == 10);
  CHECK(split_label(5, 13, 2, 6) == (2 * 13 + 6 * 5) % 65);
}

TEST_CASE("delta on L(pq,1)") {
  for (std::int64_t p = 3; p <= 30; p += 2)
    for (std::int64_t q = 3; q <= 30; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const LensSpace L(p * q, 1);
      CHECK(delta_defect(L, p, q, 1, 1) == -2);
      CHECK(delta_defect(L, p, q, 1, 0) == 0);
      CHECK(delta_defect(L, p, q, 0, 2) == 0);
    }
}

TEST_CASE("closed forms match the recursion") {
  const std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{3, 5}, {5, 7}, {7, 9}, {3, 11}, {3, 7}, {7, 11}};
  for (const auto& [p, q] : pairs) {
    const LensSpace L(p * q, 1);
    for (std::int64_t a = 1; a <= (p - 1) / 2; ++a)
      for (std::int64_t b = -(q - 1) / 2; b <= (q - 1) / 2; ++b) {
        if (b == 0) continue;
        const Rational v = delta_defect(L, p, q, a, b);
        CHECK(v == delta_closed_form(p, q, a, b));
        CHECK(v < 0);
      }
  }
  CHECK(delta_closed_form(3, 5, 1, 1) == -2);
  CHECK_THROWS_AS(delta_closed_form(3, 5, 0, 1), InvalidInput);
  CHECK_THROWS_AS(delta_closed_form(3, 5, 1, 0), InvalidInput);
  CHECK_THROWS_AS(delta_closed_form(3, 5, 2, 1), InvalidInput);
  CHECK_THROWS_AS(delta_closed_form(3, 9, 1, 1), InvalidInput);
}

TEST_CASE("delta_defect validates the split") {
  const LensSpace L(15, 1);
  CHECK_THROWS_AS(delta_defect(L, 3, 3, 1, 1), InvalidInput);
  CHECK_THROWS_AS(delta_defect(L, 1, 14, 1, 1), InvalidInput);
  CHECK_THROWS_AS(delta_defect(LensSpace(45, 2), 3, 15, 1, 1), InvalidInput);
  CHECK_THROWS_AS(delta_defect(LensSpace(14, 3), 2, 7, 1, 1), InvalidInput);
}
