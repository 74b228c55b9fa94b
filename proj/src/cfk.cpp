#include "hfsplit/cfk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "hfsplit/errors.hpp"

namespace hfsplit::cfk {

FilteredComplex::FilteredComplex(std::vector<FilteredGenerator> generators,
                                 std::vector<std::vector<Arrow>> differential)
    : gens_(std::move(generators)), diff_(std::move(differential)) {
  if (diff_.size() != gens_.size()) throw InvalidInput("differential must list arrows for every generator");
  for (std::size_t x = 0; x < gens_.size(); ++x) {
    for (const auto& a : diff_[x]) {
      if (a.target >= gens_.size()) throw InvalidInput("arrow target out of range");
      const auto& y = gens_[a.target];
      if (y.grading - 2 * a.u_power != gens_[x].grading - 1)
        throw InvalidInput("differential must lower grading by one: " + gens_[x].name + " -> " + y.name);
      if (y.alg_i - a.u_power > gens_[x].alg_i || y.alex_j - a.u_power > gens_[x].alex_j)
        throw InvalidInput("differential increases a filtration: " + gens_[x].name + " -> " + y.name);
    }
    std::map<std::pair<std::size_t, int>, int> square;
    for (const auto& a : diff_[x])
      for (const auto& b : diff_[a.target]) square[{b.target, a.u_power + b.u_power}] ^= 1;
    for (const auto& [key, parity] : square)
      if (parity) throw InvalidInput("differential does not square to zero at " + gens_[x].name);
  }
}

int FilteredComplex::genus() const {
  if (gens_.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(gens_.begin(), gens_.end(), [](const auto& a, const auto& b) {
    return a.alex_j - a.alg_i < b.alex_j - b.alg_i;
  });
  return ((hi->alex_j - hi->alg_i) - (lo->alex_j - lo->alg_i)) / 2;
}

FilteredComplex staircase(const alexander::SymmetricLaurentPoly& poly) {
  const int g = poly.genus();
  std::vector<int> exps;
  for (int e = g; e >= -g; --e) {
    const std::int64_t c = poly.at(e);
    if (c == 0) continue;
    const std::int64_t expected = exps.size() % 2 == 0 ? 1 : -1;
    if (c != expected) throw NotStaircase("coefficients must be +-1, alternating, starting with +1 at t^g");
    exps.push_back(e);
  }
  if (exps.size() % 2 == 0) throw NotStaircase("staircase needs an odd number of terms");

  std::vector<FilteredGenerator> gens{{"x0", 0, g, 0}};
  std::vector<std::vector<Arrow>> diff(exps.size());
  int i = 0, j = g;
  for (std::size_t k = 1; k < exps.size(); ++k) {
    const int step = exps[k - 1] - exps[k];
    const bool kink = k % 2 == 1;
    if (kink)
      i += step;
    else
      j -= step;
    gens.push_back({"x" + std::to_string(k), i, j, kink ? 1 : 0});
    if (kink) diff[k] = {{k - 1, 0}, {k + 1, 0}};
  }
  return FilteredComplex(std::move(gens), std::move(diff));
}

FilteredComplex double_model() { return staircase(alexander::torus_alexander(2, 3)); }

FilteredComplex tensor(const FilteredComplex& c1, const FilteredComplex& c2) {
  const std::size_t n2 = c2.size();
  std::vector<FilteredGenerator> gens;
  std::vector<std::vector<Arrow>> diff;
  gens.reserve(c1.size() * n2);
  for (std::size_t x = 0; x < c1.size(); ++x) {
    for (std::size_t y = 0; y < n2; ++y) {
      const auto& a = c1.generators()[x];
      const auto& b = c2.generators()[y];
      gens.push_back({a.name + "*" + b.name, a.alg_i + b.alg_i, a.alex_j + b.alex_j, a.grading + b.grading});
      std::map<std::pair<std::size_t, int>, int> terms;
      for (const auto& ar : c1.differential()[x]) terms[{ar.target * n2 + y, ar.u_power}] ^= 1;
      for (const auto& ar : c2.differential()[y]) terms[{x * n2 + ar.target, ar.u_power}] ^= 1;
      std::vector<Arrow> out;
      for (const auto& [key, parity] : terms)
        if (parity) out.push_back({key.first, key.second});
      diff.push_back(std::move(out));
    }
  }
  return FilteredComplex(std::move(gens), std::move(diff));
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Span of F_2 vectors kept in insertion order; each vector is zero on all earlier pivots.
class F2Span {
 public:
  explicit F2Span(std::size_t width) : width_(width) {}

  Bits reduce(Bits v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (v.test(pivots_[r])) v ^= rows_[r];
    return v;
  }
  bool add(const Bits& v) {
    Bits w = reduce(v);
    const std::size_t p = w.find_first();
    if (p == Bits::npos) return false;
    for (auto& row : rows_)
      if (row.test(p)) row ^= w;
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }
  bool contains(const Bits& v) const { return reduce(v).none(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<Bits> rows_;
  std::vector<std::size_t> pivots_;
};

// The quotient C / C{i < 0, j < s}, graded piece by graded piece. Element (x, k) is
// U^{-k} x: position (i_x + k, j_x + k), grading g_x + 2k.
class Quotient {
 public:
  Quotient(const FilteredComplex& c, int s) : c_(c), s_(s) {}

  struct Degree {
    int deg = 0;
    std::vector<std::size_t> gens;
    std::vector<int> pos;  // per generator, -1 when absent
  };

  bool kept(std::size_t x, int k) const {
    const auto& g = c_.generators()[x];
    return g.alg_i + k >= 0 || g.alex_j + k >= s_;
  }

  int shift(std::size_t x, int deg) const { return (deg - c_.generators()[x].grading) / 2; }

  Degree basis(int deg) const {
    Degree d;
    d.deg = deg;
    d.pos.assign(c_.size(), -1);
    for (std::size_t x = 0; x < c_.size(); ++x) {
      const int gr = c_.generators()[x].grading;
      if (((deg - gr) % 2 + 2) % 2 != 0) continue;
      if (!kept(x, (deg - gr) / 2)) continue;
      d.pos[x] = static_cast<int>(d.gens.size());
      d.gens.push_back(x);
    }
    return d;
  }

  // Boundary of the element of `from` carried by generator x, in coordinates of `to`.
  Bits boundary(const Degree& from, std::size_t x, const Degree& to) const {
    Bits v(to.gens.size());
    const int k = shift(x, from.deg);
    for (const auto& a : c_.differential()[x]) {
      const int kk = k - a.u_power;
      if (!kept(a.target, kk)) continue;
      const int p = to.pos[a.target];
      if (p < 0) throw std::logic_error("boundary left the graded piece");
      v.flip(static_cast<std::size_t>(p));
    }
    return v;
  }

  F2Span boundaries_into(const Degree& d) const {
    const Degree up = basis(d.deg + 1);
    F2Span span(d.gens.size());
    for (auto x : up.gens) span.add(boundary(up, x, d));
    return span;
  }

  std::optional<int> bottom_of_tower(int top) const {
    Degree cur = basis(top);
    const Degree lower = basis(top - 1);
    // Kernel of the boundary map out of degree `top`, via row reduction with bookkeeping.
    std::vector<std::pair<Bits, Bits>> reduced;  // (boundary part, combination)
    std::vector<std::size_t> pivots;
    std::vector<Bits> kernel;
    for (std::size_t t = 0; t < cur.gens.size(); ++t) {
      Bits b = boundary(cur, cur.gens[t], lower);
      Bits comb(cur.gens.size());
      comb.set(t);
      for (std::size_t r = 0; r < reduced.size(); ++r)
        if (b.test(pivots[r])) {
          b ^= reduced[r].first;
          comb ^= reduced[r].second;
        }
      const std::size_t p = b.find_first();
      if (p == Bits::npos) {
        kernel.push_back(std::move(comb));
        continue;
      }
      for (auto& row : reduced)
        if (row.first.test(p)) {
          row.first ^= b;
          row.second ^= comb;
        }
      reduced.emplace_back(std::move(b), std::move(comb));
      pivots.push_back(p);
    }
    const F2Span bd = boundaries_into(cur);
    if (kernel.size() != bd.rank() + 1) return std::nullopt;
    Bits chain;
    for (const auto& z : kernel)
      if (!bd.contains(z)) {
        chain = z;
        break;
      }
    const int floor = top - 4 * static_cast<int>(c_.size()) - 8 * (std::abs(s_) + c_.genus()) - 64;
    while (cur.deg > floor) {
      const Degree next = basis(cur.deg - 2);
      Bits moved(next.gens.size());
      for (std::size_t t = chain.find_first(); t != Bits::npos; t = chain.find_next(t)) {
        const std::size_t x = cur.gens[t];
        if (kept(x, shift(x, cur.deg) - 1)) moved.flip(static_cast<std::size_t>(next.pos[x]));
      }
      if (moved.none()) return cur.deg;
      if (boundaries_into(next).contains(moved)) return cur.deg;
      chain = std::move(moved);
      cur = next;
    }
    throw std::logic_error("U-tower did not terminate");
  }

 private:
  const FilteredComplex& c_;
  int s_;
};

}  // namespace

int tilde_d(const FilteredComplex& c, int s, const TruncationPolicy& policy) {
  if (c.size() == 0) throw InvalidInput("tilde_d of the empty complex");
  const Quotient q(c, s);
  const int base = 2 * c.genus() + std::abs(s) + policy.extra;
  std::optional<int> previous;
  for (int w = base; w <= base + policy.max_growth; w += policy.step) {
    const auto value = q.bottom_of_tower(2 * w);
    if (value && previous && *value == *previous) return *value;
    previous = value;
  }
  throw NotStabilized("tilde_d did not stabilize for s = " + std::to_string(s));
}

Rational eta(std::int64_t n, std::int64_t s) {
  if (n <= 0) throw InvalidInput("eta: n must be positive");
  const std::int64_t t = 2 * s - n;
  return Rational(-t * t + n, 4 * n);
}

Rational d_surgery(const FilteredComplex& c, std::int64_t n, std::int64_t s) {
  if (n < 1 || n % 2 == 0) throw InvalidInput("d_surgery: n must be odd and positive");
  if (2 * std::abs(s) > n - 1) throw InvalidInput("d_surgery: need |s| <= (n-1)/2");
  if (n < 2 * c.genus() - 1) throw InvalidInput("d_surgery: n is below the large surgery bound 2g - 1");
  return Rational(tilde_d(c, static_cast<int>(s))) - eta(n, s);
}

LabeledTable dbar_surgery_table(const FilteredComplex& c, std::int64_t n, std::int64_t m1, std::int64_t m2) {
  if (m1 < 1 || m2 < 1 || m1 * m2 != n || std::gcd(m1, m2) != 1)
    throw InvalidInput("dbar_surgery_table: need n = m1*m2 with m1, m2 coprime");
  std::map<std::int64_t, Rational> memo;
  auto d = [&](std::int64_t s) {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, d_surgery(c, n, s)).first;
    return it->second;
  };
  LabeledTable t;
  t.row_labels = centred_labels(m1, true);
  t.col_labels = centred_labels(m2, false);
  const Rational base = d(0);
  for (auto a : t.row_labels) {
    std::vector<Rational> row;
    for (auto b : t.col_labels) row.push_back(d(centred_residue(a * m2 + b * m1, n)) - base);
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::array<int, 2> pq_torus_difference(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw InvalidInput("pq_torus_difference: p must be odd and >= 3");
  const FilteredComplex knot = staircase(alexander::torus_alexander(p, p + 2));
  const FilteredComplex doubled = tensor(knot, double_model());
  return {tilde_d(knot, 1) - tilde_d(doubled, 1), tilde_d(knot, 0) - tilde_d(doubled, 0)};
}

}  // namespace hfsplit::cfk
