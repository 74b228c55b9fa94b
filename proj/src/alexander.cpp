#include "hfsplit/alexander.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hfsplit/errors.hpp"

namespace hfsplit::alexander {

SymmetricLaurentPoly::SymmetricLaurentPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("Alexander polynomial needs at least a_0");
  if (coeffs_.size() > 1 && coeffs_.back() == 0) throw InvalidInput("top coefficient a_g is zero");
  std::int64_t at_one = coeffs_.front();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) at_one += 2 * coeffs_[i];
  if (at_one != 1) throw InvalidInput("Alexander polynomial must satisfy Delta(1) = 1");
}

std::int64_t SymmetricLaurentPoly::at(int k) const {
  const auto i = static_cast<std::size_t>(k < 0 ? -k : k);
  return i < coeffs_.size() ? coeffs_[i] : 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) {
  for (auto c : coeffs) coeffs_.emplace_back(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::at(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : BigInt(0);
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<BigInt> out(f.coeffs().size() + g.coeffs().size() - 1, BigInt(0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) out[i + j] += f.coeffs()[i] * g.coeffs()[j];
  return IntPoly(std::move(out));
}

IntPoly exact_divide(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw InvalidInput("division by the zero polynomial");
  std::vector<BigInt> rem = num.coeffs();
  const int dn = den.degree();
  const BigInt& lead = den.coeffs().back();
  if (num.degree() < dn) {
    if (!num.is_zero()) throw std::logic_error("polynomial division left a remainder");
    return {};
  }
  std::vector<BigInt> quot(static_cast<std::size_t>(num.degree() - dn + 1), BigInt(0));
  for (int k = num.degree() - dn; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + dn)];
    if (top % lead != 0) throw std::logic_error("polynomial division is not exact over Z");
    const BigInt c = top / lead;
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("polynomial division left a remainder");
  return IntPoly(std::move(quot));
}

namespace {

IntPoly one_minus_power(std::int64_t k) {
  std::vector<BigInt> c(static_cast<std::size_t>(k + 1), BigInt(0));
  c.front() = 1;
  c.back() = -1;
  return IntPoly(std::move(c));
}

}  // namespace

SymmetricLaurentPoly torus_alexander(std::int64_t p, std::int64_t q) {
  if (p < 2 || q <= p) throw InvalidInput("torus_alexander: need 2 <= p < q");
  if (std::gcd(p, q) != 1) throw InvalidInput("torus_alexander: p and q must be coprime");
  if (p * q > 1000000) throw InvalidInput("torus_alexander: pq too large");
  const IntPoly num = one_minus_power(p * q) * one_minus_power(1);
  const IntPoly den = one_minus_power(p) * one_minus_power(q);
  const IntPoly delta = exact_divide(num, den);
  const std::int64_t g = (p - 1) * (q - 1) / 2;
  if (delta.degree() != 2 * g) throw std::logic_error("torus_alexander: unexpected degree");
  std::vector<std::int64_t> a(static_cast<std::size_t>(g + 1));
  for (std::int64_t i = 0; i <= g; ++i) {
    const BigInt& c = delta.coeffs()[static_cast<std::size_t>(g + i)];
    if (c != delta.coeffs()[static_cast<std::size_t>(g - i)]) throw std::logic_error("torus_alexander: not symmetric");
    a[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(c);
  }
  std::int64_t at_one = a.front();
  for (std::size_t i = 1; i < a.size(); ++i) at_one += 2 * a[i];
  if (at_one == -1)
    for (auto& c : a) c = -c;
  return SymmetricLaurentPoly(std::move(a));
}

std::vector<std::int64_t> torsion_coeffs(const SymmetricLaurentPoly& poly) {
  const int g = poly.genus();
  std::vector<std::int64_t> t(static_cast<std::size_t>(g + 1), 0);
  for (int s = 0; s <= g; ++s) {
    std::int64_t acc = 0;
    for (int j = 1; s + j <= g; ++j) acc += j * poly.at(s + j);
    t[static_cast<std::size_t>(s)] = acc;
  }
  return t;
}

std::int64_t rep_count(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p < 1 || q < 1) throw InvalidInput("rep_count: p and q must be positive");
  if (i < 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t x = 0; x * p <= i; ++x)
    if ((i - x * p) % q == 0) ++count;
  return count;
}

CoefficientReport check_low_coefficients(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw InvalidInput("check_low_coefficients: p must be odd and >= 3");
  CoefficientReport r;
  r.p = p;
  r.q = p + 2;
  const auto delta = torus_alexander(p, r.q);
  const std::int64_t half = (p - 1) / 2;
  for (std::int64_t i = 0; i <= half; ++i) r.low_coeffs.push_back(delta.at(static_cast<int>(i)));
  r.sign_a0 = r.low_coeffs.front() > 0 ? 1 : -1;
  r.unit_magnitudes = true;
  r.alternating = true;
  for (std::size_t i = 0; i < r.low_coeffs.size(); ++i) {
    if (r.low_coeffs[i] != 1 && r.low_coeffs[i] != -1) r.unit_magnitudes = false;
    if (i > 0 && r.low_coeffs[i] != -r.low_coeffs[i - 1]) r.alternating = false;
  }
  // Unnormalized coefficients c_k of t^k, 0 <= k <= 2g, against b_k - b_{k-1}.
  const int g = delta.genus();
  r.counts_regenerate = true;
  for (int k = 0; k < 2 * g; ++k) {
    const std::int64_t c = delta.at(k - g);
    if (c != rep_count(p, r.q, k) - rep_count(p, r.q, k - 1)) r.counts_regenerate = false;
  }
  r.counts_alternate = true;
  for (std::int64_t i = g - half; i <= g; ++i) {
    const std::int64_t b = rep_count(p, r.q, i);
    if (b > 1 || (i > g - half && b == rep_count(p, r.q, i - 1))) r.counts_alternate = false;
  }
  return r;
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly remainder(RatPoly f, const RatPoly& g) {
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const Rational c = f.back() / g.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) f[shift + j] -= c * g[j];
    f.pop_back();
    trim(f);
  }
  return f;
}

Rational power(const Rational& x, std::size_t e) {
  Rational out(1);
  for (std::size_t i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

BigInt resultant(const IntPoly& f0, const IntPoly& g0) {
  if (f0.is_zero() || g0.is_zero()) throw InvalidInput("resultant of the zero polynomial");
  RatPoly f(f0.coeffs().begin(), f0.coeffs().end());
  RatPoly g(g0.coeffs().begin(), g0.coeffs().end());
  Rational acc(1);
  // Res(f, g) with deg f = m, deg g = n.
  while (true) {
    const std::size_t m = f.size() - 1;
    const std::size_t n = g.size() - 1;
    if (n == 0) {
      acc *= power(g.front(), m);
      break;
    }
    if (m == 0) {
      acc *= power(f.front(), n);
      break;
    }
    // Res(f, g) = (-1)^{mn} Res(g, f) = (-1)^{mn} lc(g)^{m-k} Res(g, f mod g).
    RatPoly r = remainder(f, g);
    if (r.empty()) return 0;
    const std::size_t k = r.size() - 1;
    if ((m * n) % 2 == 1) acc = -acc;
    acc *= power(g.back(), m - k);
    f = std::move(g);
    g = std::move(r);
  }
  if (!is_integer(acc)) throw std::logic_error("resultant of integer polynomials is not an integer");
  return numerator(acc);
}

}  // namespace hfsplit::alexander
