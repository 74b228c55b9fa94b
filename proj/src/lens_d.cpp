#include "hfsplit/lens_d.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hfsplit/errors.hpp"

namespace hfsplit::lens {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::string lens_name(std::int64_t m, std::int64_t n) {
  return "L(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

const char* to_string(Orientation o) {
  return o == Orientation::standard ? "standard" : "reversed";
}

LensSpace::LensSpace(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m <= 0) throw InvalidInput("lens space order must be positive: " + lens_name(m, n));
  if (m == 1) {
    if (n != 0) throw InvalidInput("L(1,n) requires n = 0");
    return;
  }
  if (n <= 0 || n >= m) throw InvalidInput("need 0 < n < m for " + lens_name(m, n));
  if (std::gcd(m, n) != 1) throw InvalidInput("non-coprime parameters " + lens_name(m, n));
}

SpincIndex::SpincIndex(const LensSpace& L, std::int64_t i) : i_(i) {
  if (i < 0 || i >= L.m())
    throw InvalidInput("Spin^c label " + std::to_string(i) + " out of range for " +
                       lens_name(L.m(), L.n()));
}

SpincIndex SpincIndex::wrap(const LensSpace& L, std::int64_t i) {
  return SpincIndex(L, floor_mod(i, L.m()));
}

Rational big_d(std::int64_t m, std::int64_t n, std::int64_t i) {
  if (m <= 0) throw InvalidInput("big_d: m must be positive");
  if (m == 1) {
    if (n != 0 || i != 0) throw InvalidInput("big_d: base case is D(1,0,0)");
    return Rational(0);
  }
  if (n <= 0 || n >= m) throw InvalidInput("big_d: need 0 < n < m");
  if (std::gcd(m, n) != 1) throw InvalidInput("big_d: m and n must be coprime");
  if (i < 0 || i >= m) throw InvalidInput("big_d: label out of range");

  // Iterative unwinding: depth is the length of the continued fraction of m/n.
  Rational acc = 0;
  int sign = 1;
  while (m != 1) {
    const BigInt mn = BigInt(m) * n;
    const BigInt t = BigInt(2 * i + 1) - m - n;
    acc += sign * Rational(mn - t * t, 4 * mn);
    const std::int64_t next_n = m % n;
    i %= n;
    m = n;
    n = next_n;
    sign = -sign;
  }
  return acc;
}

Rational d_lens(const LensSpace& L, SpincIndex i, Orientation o) {
  const Rational D = big_d(L.m(), L.n(), i.value());
  return o == Orientation::reversed ? D : Rational(-D);
}

Rational d_chain_closed(std::int64_t r, std::int64_t x, std::int64_t y) {
  if (r <= 0) throw InvalidInput("d_chain_closed: r must be positive");
  if (y < 0 || y >= 2 * r) throw InvalidInput("d_chain_closed: need 0 <= y < 2r");
  const std::int64_t label = 2 * r * x + y;
  if (label < 0 || label >= 4 * r * r + 1)
    throw InvalidInput("d_chain_closed: need 0 <= 2rx+y < 4r^2+1");
  const BigInt R(r), X(x), Y(y);
  const BigInt num = 2 * (R * X * X + (Y - R * (2 * R + 1)) * X - R * (Y * Y - (2 * R - 1) * Y - R));
  return Rational(num, 4 * R * R + 1);
}

std::optional<SpincIndex> try_spin_index(const LensSpace& L) {
  const std::int64_t m = L.m();
  if (m % 2 == 0) throw InvalidInput("spin_index: m must be odd");
  if (m == 1) return SpincIndex(L, 0);
  if (L.n() == 1) return SpincIndex(L, 0);
  if (L.n() % 2 == 0) {
    const std::int64_t r = L.n() / 2;
    if (4 * r * r + 1 == m) return SpincIndex(L, 2 * r * r + r);
  }
  std::map<Rational, std::vector<std::int64_t>> by_value;
  for (std::int64_t i = 0; i < m; ++i) by_value[big_d(m, L.n(), i)].push_back(i);
  std::optional<SpincIndex> found;
  for (const auto& [value, labels] : by_value) {
    if (labels.size() != 1) continue;
    if (found) return std::nullopt;
    found = SpincIndex(L, labels.front());
  }
  return found;
}

SpincIndex spin_index(const LensSpace& L) {
  if (auto s = try_spin_index(L)) return *s;
  throw AmbiguousSpin("cannot identify the Spin structure of " + lens_name(L.m(), L.n()) +
                      "; supply the label explicitly");
}

Rational dbar(const LensSpace& L, std::int64_t offset, Orientation o) {
  const std::int64_t s = spin_index(L).value();
  return d_lens(L, SpincIndex::wrap(L, s + offset), o) - d_lens(L, SpincIndex(L, s), o);
}

std::int64_t split_label(std::int64_t m1, std::int64_t m2, std::int64_t a, std::int64_t b) {
  const std::int64_t m = m1 * m2;
  return floor_mod(floor_mod(a, m1) * m2 + floor_mod(b, m2) * m1, m);
}

Rational delta_defect(const LensSpace& L, std::int64_t m1, std::int64_t m2, std::int64_t a,
                      std::int64_t b, Orientation o) {
  if (m1 <= 0 || m2 <= 0 || m1 * m2 != L.m())
    throw InvalidInput("delta_defect: need m1*m2 = m");
  if (std::gcd(m1, m2) != 1) throw InvalidInput("delta_defect: m1 and m2 must be coprime");
  if (L.m() % 2 == 0) throw InvalidInput("delta_defect: m must be odd");
  const std::int64_t s = spin_index(L).value();
  auto d = [&](std::int64_t offset) { return d_lens(L, SpincIndex::wrap(L, s + offset), o); };
  return d(split_label(m1, m2, a, b)) - d(split_label(m1, m2, a, 0)) -
         d(split_label(m1, m2, 0, b)) + d(0);
}

Rational delta_closed_form(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b) {
  if (p % 2 == 0 || q % 2 == 0 || std::gcd(p, q) != 1)
    throw InvalidInput("delta_closed_form: p, q must be coprime and odd");
  if (a == 0 || b == 0) throw InvalidInput("delta_closed_form: a and b must be nonzero");
  if (a < 0 || a > (p - 1) / 2) throw InvalidInput("delta_closed_form: need 0 < a <= (p-1)/2");
  if (b < -(q - 1) / 2 || b > (q - 1) / 2)
    throw InvalidInput("delta_closed_form: need |b| <= (q-1)/2");
  if (b > 0) return Rational(-2 * a * b);
  if (a * q + b * p > 0) return Rational(-2 * b * (a - p));
  return Rational(-2 * a * (b + q));
}

}  // namespace hfsplit::lens
