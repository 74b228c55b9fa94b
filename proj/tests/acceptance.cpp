// Acceptance suite: one PASS/FAIL line per criterion, details indented below it.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hfsplit/alexander.hpp"
#include "hfsplit/cfk.hpp"
#include "hfsplit/errors.hpp"
#include "hfsplit/lens_d.hpp"
#include "hfsplit/linking_forms.hpp"
#include "hfsplit/obstruction.hpp"
#include "hfsplit/sieve.hpp"
#include "oracles.hpp"

using namespace hfsplit;

namespace {

// Time limits in seconds.
constexpr double kChainRecursionLimit = 1.0;
constexpr double kSurgeryChartsLimit = 10.0;
constexpr double kLargeTensorLimit = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int k, bool ok, const std::string& what, const std::vector<std::string>& details = {}) {
  std::cout << (ok ? "[PASS] #" : "[FAIL] #") << k << ' ' << what << '\n';
  for (const auto& d : details) std::cout << "    " << d << '\n';
  if (!ok) ++failures;
}

// Runs a criterion body; an escaped exception is a failure with its message as detail.
void criterion(int k, const std::string& what, const std::function<bool(std::vector<std::string>&)>& body) {
  std::vector<std::string> details;
  bool ok = false;
  try {
    ok = body(details);
  } catch (const std::exception& e) {
    details.push_back(std::string("exception: ") + e.what());
  }
  report(k, ok, what, details);
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

// A printed chart: row labels a, column labels b, integer cells.
struct PrintedTable {
  std::string name;
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;
  std::vector<std::vector<std::int64_t>> cells;
};

// Cell-for-cell comparison with a computed value function.
std::vector<std::string> mismatches(const PrintedTable& t, const std::function<Rational(std::int64_t, std::int64_t)>& ours) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.cols.size(); ++c) {
      const Rational v = ours(t.rows[r], t.cols[c]);
      if (v != t.cells[r][c])
        out.push_back("(a=" + std::to_string(t.rows[r]) + ", b=" + std::to_string(t.cols[c]) + ") printed " +
                      std::to_string(t.cells[r][c]) + ", computed " + to_string(v));
    }
  return out;
}

struct Relabeling {
  int sa, sb, sign;
  std::string text() const {
    return std::string("(a,b) -> (") + (sa < 0 ? "-a" : "a") + ", " + (sb < 0 ? "-b" : "b") + "), sign " +
           (sign < 0 ? "-1" : "+1");
  }
};

// Best element of {(+-a, +-b)} x {+-1}: fewest mismatching cells, identity first on ties.
std::pair<Relabeling, std::vector<std::string>> best_relabeling(
    const PrintedTable& t, std::int64_t m1, std::int64_t m2,
    const std::function<Rational(std::int64_t, std::int64_t)>& ours) {
  std::pair<Relabeling, std::vector<std::string>> best{{1, 1, 1}, {}};
  bool first = true;
  for (int sign : {1, -1})
    for (int sa : {1, -1})
      for (int sb : {1, -1}) {
        auto bad = mismatches(t, [&](std::int64_t a, std::int64_t b) {
          return ours(floor_mod(sa * a, m1), floor_mod(sb * b, m2)) * sign;
        });
        if (first || bad.size() < best.second.size()) best = {{sa, sb, sign}, std::move(bad)};
        first = false;
      }
  return best;
}

bool axes_zero(const PrintedTable& t) {
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.cols.size(); ++c)
      if ((t.rows[r] == 0 || t.cols[c] == 0) && t.cells[r][c] != 0) return false;
  return true;
}

bool has_nonzero(const PrintedTable& t) {
  for (const auto& row : t.cells)
    for (auto v : row)
      if (v != 0) return true;
  return false;
}

std::vector<forms::FiniteAbelianGroup> groups_of_order(std::int64_t n) {
  std::vector<forms::FiniteAbelianGroup> out;
  std::vector<std::int64_t> chain;
  auto rec = [&](auto&& self, std::int64_t rest, std::int64_t bound) -> void {
    if (rest == 1) {
      out.emplace_back(std::vector<std::int64_t>(chain.rbegin(), chain.rend()));
      return;
    }
    for (std::int64_t d = 2; d <= rest; ++d) {
      if (rest % d || bound % d) continue;
      chain.push_back(d);
      self(self, rest / d, d);
      chain.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> unit_representatives(std::int64_t p) {
  if (p == 2) return {1};
  for (std::int64_t u = 2; u < p; ++u) {
    bool square = false;
    for (std::int64_t x = 1; x < p; ++x) square = square || x * x % p == u;
    if (!square) return {1, u};
  }
  return {1};
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? ", " : "") << v[k];
  return s.str();
}

// ---------------------------------------------------------------------------------------------

const PrintedTable kL65Dbar{"65 d(L(65,8), 13a+5b)",
                         {2, 1, 0, -1, -2},
                         {0, 1, 2, 3, 4, 5, 6},
                         {{-52, 18, -32, 58, 28, 8, 128},
                          {52, -8, 72, 32, 2, 112, -28},
                          {0, 70, 20, -20, 80, -70, -80},
                          {52, -8, -58, 32, -128, 18, -28},
                          {-52, -112, -32, -72, 28, 8, -2}}};

const PrintedTable kL65Defect{"defect of L(65,8)",
                         {2, 1, 0, -1, -2},
                         {0, 1, 2, 3, 4, 5, 6},
                         {{0, 0, 0, 2, 0, 2, 4},
                          {0, -2, 0, 0, -2, 2, 0},
                          {0, 0, 0, 0, 0, 0, 0},
                          {0, -2, -2, 0, -4, 0, 0},
                          {0, -2, 0, 0, 0, 2, 2}}};

const PrintedTable kT35Dbar{"30 dbar(S^3_15(T(3,5)))",
                         {1, 0, -1},
                         {-2, -1, 0, 1, 2},
                         {{32, 8, 20, 8, 32}, {12, -12, 0, -12, 12}, {32, 8, 20, 8, 32}}};

const PrintedTable kT35DoubleDbar{"30 dbar(S^3_15(T(3,5) # D))",
                         {1, 0, -1},
                         {-2, -1, 0, 1, 2},
                         {{-28, 8, 20, 8, -28}, {12, -12, 0, -12, 12}, {-28, 8, 20, 8, -28}}};

const PrintedTable kT57Dbar{"70 dbar(S^3_35(T(5,7)))",
                         {2, 1, 0, -1, -2},
                         {-3, -2, -1, 0, 1, 2, 3},
                         {{-68, -108, -48, -28, -48, -108, -68},
                          {-12, -52, 8, 28, 8, -52, -12},
                          {-40, -80, -20, 0, -20, -80, -40},
                          {-12, -52, 8, 28, 8, -52, -12},
                          {-68, -108, -48, -28, -48, -108, -68}}};

const PrintedTable kT57DoubleDbar{"70 dbar(S^3_35(T(5,7) # D))",
                         {2, 1, 0, -1, -2},
                         {-3, -2, -1, 0, 1, 2, 3},
                         {{72, 32, 92, 112, 92, 32, 72},
                          {128, 88, 8, 28, 8, 88, 128},
                          {100, 60, -20, 0, -20, 60, 100},
                          {128, 88, 8, 28, 8, 88, 128},
                          {72, 32, 92, 112, 92, 32, 72}}};

const PrintedTable kT57Difference{"dbar difference, T(5,7) # D minus T(5,7)",
                         {2, 1, 0, -1, -2},
                         {-3, -2, -1, 0, 1, 2, 3},
                         {{2, 2, 2, 2, 2, 2, 2},
                          {2, 2, 0, 0, 0, 2, 2},
                          {2, 2, 0, 0, 0, 2, 2},
                          {2, 2, 0, 0, 0, 2, 2},
                          {2, 2, 2, 2, 2, 2, 2}}};

const PrintedTable kL33Dbar{"33 dbar(L(33,13), 11a+3b)",
                         {2, 0, -1},
                         {0, 1, 2, 3, 4, 5},
                         {{22, 10, 40, -20, 28, -14}, {0, 54, 18, 24, 6, 30}, {22, 10, 40, 46, 28, 52}}};

const PrintedTable kL33Defect{"defect of L(33,13)",
                         {2, 0, -1},
                         {0, 1, 2, 3, 4, 5},
                         {{0, 2, 0, 2, 0, 2}, {0, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}}};

const std::vector<int> kTildeT35{-14, -12, -10, -8, -8, -6, -4, -4, -2, -2, -2, 0, 0, 0, 0};
const std::vector<int> kTildeT35D{-14, -12, -10, -10, -8, -6, -6, -4, -4, -2, -2, -2, 0, 0, 0};
const std::vector<int> kShiftedT35{-7, -3, 5, 17, -27, -7, 17, -15, 17, -7, -27, 17, 5, -3, -7};
const std::vector<int> kShiftedT35D{-7, -3, 5, -43, -27, -7, -43, -15, -43, -7, -27, -43, 5, -3, -7};
const std::vector<int> kBarT35D{8, 12, 20, -28, -12, 8, -28, 0, -28, 8, -12, -28, 20, 12, 8};

// ---------------------------------------------------------------------------------------------

bool closed_form_identity(std::vector<std::string>& details) {
  std::mt19937_64 rng(20240601);
  int done = 0;
  bool ok = true;
  while (done < 10) {
    const std::int64_t p = 3 + 2 * static_cast<std::int64_t>(rng() % 20);
    const std::int64_t q = 3 + 2 * static_cast<std::int64_t>(rng() % 20);
    const std::int64_t m = p * q;
    if (p == q || std::gcd(p, q) != 1 || m > 1000) continue;
    ++done;
    for (std::int64_t i = 0; i < m; ++i)
      if (lens::big_d(m, 1, i) * 4 * m != Rational(-4 * i * i + 4 * m * i + m * (1 - m))) {
        ok = false;
        details.push_back("L(" + std::to_string(m) + ",1) label " + std::to_string(i));
      }
    details.push_back("checked p=" + std::to_string(p) + ", q=" + std::to_string(q));
  }
  return ok;
}

bool lens_pq_defects(std::vector<std::string>& details) {
  bool ok = true;
  for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 5}, {5, 7}, {3, 7}, {7, 11}}) {
    const lens::LensSpace L(p * q, 1);
    const Rational d11 = lens::delta_defect(L, p, q, 1, 1);
    if (d11 != -2) {
      ok = false;
      details.push_back("delta(1,1) for (" + std::to_string(p) + "," + std::to_string(q) + ") = " + to_string(d11));
    }
    int cells = 0;
    for (std::int64_t a = 1; a <= (p - 1) / 2; ++a)
      for (std::int64_t b = -(q - 1) / 2; b <= (q - 1) / 2; ++b) {
        if (b == 0) continue;
        ++cells;
        if (lens::delta_closed_form(p, q, a, b) != lens::delta_defect(L, p, q, a, b)) {
          ok = false;
          details.push_back("closed form differs at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    details.push_back("(" + std::to_string(p) + "," + std::to_string(q) + "): delta(1,1) = " + to_string(d11) + ", " +
                      std::to_string(cells) + " cells");
  }
  return ok;
}

bool chain_family(std::vector<std::string>& details) {
  bool ok = true;
  for (std::int64_t r = 1; r <= 10; ++r) {
    const std::int64_t m = 4 * r * r + 1;
    const lens::LensSpace L(m, 2 * r);
    const auto s = lens::spin_index(L).value();
    // Independent of the family rule: the unique label with d = 0.
    std::vector<std::int64_t> zeros;
    for (std::int64_t i = 0; i < m; ++i)
      if (lens::big_d(m, 2 * r, i) == 0) zeros.push_back(i);
    if (s != 2 * r * r + r || zeros != std::vector<std::int64_t>{s}) {
      ok = false;
      details.push_back("r=" + std::to_string(r) + ": spin " + std::to_string(s) + ", zeros at " + join(zeros));
    }
    if (r > 8) continue;
    for (std::int64_t i = 0; i < m; ++i)
      if (lens::d_chain_closed(r, i / (2 * r), i % (2 * r)) != lens::d_lens(L, lens::SpincIndex(L, i))) {
        ok = false;
        details.push_back("r=" + std::to_string(r) + ": closed form differs at label " + std::to_string(i));
      }
  }
  details.push_back("spin labels checked for r <= 10, closed form on every label for r <= 8");
  return ok;
}

bool twotorsion(std::vector<std::string>& details) {
  bool ok = true;
  for (std::int64_t n : {5, 10, 15}) {
    const auto rep = obstruction::twotorsion_defect(n);
    details.push_back("n=" + std::to_string(n) + ": L(" + std::to_string(5 * rep.p) + "," + std::to_string(2 * rep.r) +
                      ") recursion " + to_string(rep.by_recursion) + ", closed form " + to_string(rep.by_closed_form));
    ok = ok && rep.by_recursion == 4 && rep.by_closed_form == 4;
  }
  const auto start = Clock::now();
  const lens::LensSpace L(2705, 52);
  Rational sum = 0;
  for (std::int64_t i = 0; i < 2705; ++i) sum += lens::d_lens(L, lens::SpincIndex(L, i));
  const double t = seconds_since(start);
  details.push_back("all 2705 labels of L(2705,52) in " + std::to_string(t) + " s (limit " +
                    std::to_string(kChainRecursionLimit) + " s)");
  return ok && t < kChainRecursionLimit;
}

bool surgery_sequences(std::vector<std::string>& details) {
  const auto t35 = cfk::staircase(alexander::torus_alexander(3, 5));
  const auto t35d = cfk::tensor(t35, cfk::double_model());
  std::vector<int> tilde, tilde_d;
  std::vector<Rational> shifted, shifted_d, bar_d;
  const Rational spin_d = cfk::d_surgery(t35d, 15, 0);
  for (int s = -7; s <= 7; ++s) {
    tilde.push_back(cfk::tilde_d(t35, s));
    tilde_d.push_back(cfk::tilde_d(t35d, s));
    shifted.push_back(cfk::d_surgery(t35, 15, s) * 30);
    shifted_d.push_back(cfk::d_surgery(t35d, 15, s) * 30);
    bar_d.push_back((cfk::d_surgery(t35d, 15, s) - spin_d) * 30);
  }
  auto same = [](const std::vector<Rational>& a, const std::vector<int>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const Rational& x, int y) { return x == y; });
  };
  const bool ok = tilde == kTildeT35 && tilde_d == kTildeT35D && same(shifted, kShiftedT35) &&
                  same(shifted_d, kShiftedT35D) && same(bar_d, kBarT35D);
  details.push_back("tilde_d T(3,5):     " + join(tilde));
  details.push_back("tilde_d T(3,5) # D: " + join(tilde_d));
  details.push_back("30 d T(3,5) # D:    " + join(shifted_d));
  return ok;
}

bool surgery_charts(std::vector<std::string>& details) {
  const auto start = Clock::now();
  const auto t35 = cfk::staircase(alexander::torus_alexander(3, 5));
  const auto t57 = cfk::staircase(alexander::torus_alexander(5, 7));
  const auto f3 = cfk::dbar_surgery_table(t35, 15, 3, 5);
  const auto f4 = cfk::dbar_surgery_table(cfk::tensor(t35, cfk::double_model()), 15, 3, 5);
  const auto f5 = cfk::dbar_surgery_table(t57, 35, 5, 7);
  const auto f6 = cfk::dbar_surgery_table(cfk::tensor(t57, cfk::double_model()), 35, 5, 7);
  const double t = seconds_since(start);
  bool ok = true;
  auto check = [&](const PrintedTable& p, const std::function<Rational(std::int64_t, std::int64_t)>& ours) {
    const auto bad = mismatches(p, ours);
    details.push_back(p.name + ": " + std::to_string(bad.size()) + " mismatching cells");
    for (const auto& b : bad) details.push_back("  " + b);
    ok = ok && bad.empty();
  };
  check(kT35Dbar, [&](auto a, auto b) { return f3.at(a, b) * 30; });
  check(kT35DoubleDbar, [&](auto a, auto b) { return f4.at(a, b) * 30; });
  check(kT57Dbar, [&](auto a, auto b) { return f5.at(a, b) * 70; });
  check(kT57DoubleDbar, [&](auto a, auto b) { return f6.at(a, b) * 70; });
  check(kT57Difference, [&](auto a, auto b) { return f6.at(a, b) - f5.at(a, b); });
  details.push_back("computed in " + std::to_string(t) + " s (limit " + std::to_string(kSurgeryChartsLimit) + " s)");
  return ok && t < kSurgeryChartsLimit;
}

bool lens_charts(std::vector<std::string>& details) {
  const lens::LensSpace l65(65, 8), l33(33, 13);
  auto dbar65 = [&](std::int64_t a, std::int64_t b) { return lens::dbar(l65, lens::split_label(5, 13, a, b)) * 65; };
  auto def65 = [&](std::int64_t a, std::int64_t b) { return lens::delta_defect(l65, 5, 13, a, b, lens::Orientation::standard); };
  auto dbar33 = [&](std::int64_t a, std::int64_t b) { return lens::dbar(l33, lens::split_label(3, 11, a, b)) * 33; };
  auto def33 = [&](std::int64_t a, std::int64_t b) { return lens::delta_defect(l33, 3, 11, a, b, lens::Orientation::standard); };

  bool tables_ok = true;
  auto match = [&](const PrintedTable& p, std::int64_t m1, std::int64_t m2,
                   const std::function<Rational(std::int64_t, std::int64_t)>& ours) {
    const auto [rel, bad] = best_relabeling(p, m1, m2, ours);
    details.push_back(p.name + ": relabeling " + rel.text() + ", " + std::to_string(bad.size()) + " mismatching cells");
    for (const auto& b : bad) details.push_back("  " + b);
    tables_ok = tables_ok && bad.empty();
  };
  match(kL65Dbar, 5, 13, dbar65);
  match(kL65Defect, 5, 13, def65);
  match(kL33Dbar, 3, 11, dbar33);
  match(kL33Defect, 3, 11, def33);

  // Verdicts, no relabeling freedom.
  const auto r65 = obstruction::defect_table(obstruction::Lens{65, 8, 5, 13});
  const auto r33 = obstruction::concordance_example();
  bool verdict_ok = true;
  for (const auto* r : {&r65, &r33}) {
    bool axes = true;
    for (auto a : r->defect.row_labels) axes = axes && r->defect.at(a, 0) == 0;
    for (auto b : r->defect.col_labels) axes = axes && r->defect.at(0, b) == 0;
    verdict_ok = verdict_ok && axes && r->verdict == obstruction::Verdict::obstructed && !r->witnesses.empty();
  }
  for (const auto* p : {&kL65Defect, &kL33Defect}) verdict_ok = verdict_ok && axes_zero(*p) && has_nonzero(*p);
  details.push_back(std::string("verdicts (nonzero defects, zero axes, printed and computed): ") +
                    (verdict_ok ? "hold" : "FAIL"));
  details.push_back(std::string("tables up to relabeling: ") + (tables_ok ? "match" : "do not all match"));
  return tables_ok && verdict_ok;
}

bool parity_table(std::vector<std::string>& details) {
  bool ok = true;
  for (std::int64_t p : {3, 5, 7, 9}) {
    const auto start = Clock::now();
    const auto diff = cfk::pq_torus_difference(p);
    const double t = seconds_since(start);
    const bool odd_half = ((p - 1) / 2) % 2 == 1;
    const std::array<int, 2> expected = odd_half ? std::array<int, 2>{2, 0} : std::array<int, 2>{0, 2};
    details.push_back("p=" + std::to_string(p) + ": s=1 -> " + std::to_string(diff[0]) + ", s=0 -> " +
                      std::to_string(diff[1]) + " in " + std::to_string(t) + " s");
    ok = ok && diff == expected;
    if (p == 9 && t >= kLargeTensorLimit) {
      ok = false;
      details.push_back("T(9,11) exceeded " + std::to_string(kLargeTensorLimit) + " s");
    }
  }
  return ok;
}

bool metabolizer_theorems(std::vector<std::string>& details) {
  using namespace forms;
  bool ok = true;

  // Unit first coordinate: u/p + beta on Z_p + G, |Z_p + G| = (p m)^2 <= 1000.
  std::size_t forms_checked = 0, metabolic = 0, brute = 0;
  for (std::int64_t p = 2; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t m = 1; p * m <= 31; ++m) {
      const std::int64_t order = p * m * m;
      for (auto u : unit_representatives(p)) {
        const LinkingForm head(FiniteAbelianGroup({p}), {Rational(u, p)});
        for (const auto& tail : elementary_sum_forms(order)) {
          const auto rep = verify_unit_first_coordinate(p, direct_sum(head, tail));
          ++forms_checked;
          metabolic += rep.metabolizers > 0;
          ok = ok && rep.holds;
        }
        if (p * order > 81) continue;
        for (const auto& G : groups_of_order(order))
          for (const auto& tail : all_nonsingular_forms(G)) {
            const auto rep = verify_unit_first_coordinate(p, direct_sum(head, tail));
            ++brute;
            ok = ok && rep.holds;
          }
      }
    }
  }
  details.push_back("unit first coordinate: " + std::to_string(forms_checked) + " forms (" + std::to_string(metabolic) +
                    " metabolic) plus " + std::to_string(brute) + " by full matrix enumeration");

  // Projection through a metabolic summand, |G1|, |G2| in {9, 25}.
  std::size_t pairs = 0;
  std::vector<LinkingForm> small;
  for (std::int64_t n : {9, 25})
    for (const auto& G : groups_of_order(n))
      for (const auto& f : all_nonsingular_forms(G)) small.push_back(f);
  for (const auto& f2 : small) {
    const auto m2s = enumerate_metabolizers(f2);
    if (m2s.empty()) continue;
    for (const auto& f1 : small) {
      const auto sum = direct_sum(f1, f2);
      for (const auto& M : enumerate_metabolizers(sum))
        for (const auto& M2 : m2s) {
          try {
            (void)split_projection_metabolizer(f1, f2, M, M2);
          } catch (const std::logic_error& e) {
            ok = false;
            details.push_back(std::string("projection counterexample: ") + e.what());
          }
          ++pairs;
        }
    }
  }
  details.push_back("projection property: " + std::to_string(pairs) + " (metabolizer, summand metabolizer) pairs over " +
                    std::to_string(small.size()) + " forms");

  // Four copies of a form on a group of order <= 10 are metabolic.
  std::size_t four = 0;
  for (std::int64_t n = 2; n <= 10; ++n)
    for (const auto& G : groups_of_order(n))
      for (const auto& f : all_nonsingular_forms(G)) {
        ++four;
        if (!find_metabolizer(multiple(f, 4))) {
          ok = false;
          details.push_back("no metabolizer for 4 copies of a form on order " + std::to_string(n));
        }
      }
  details.push_back("four-fold sums: " + std::to_string(four) + " forms");
  return ok;
}

bool coefficient_theorem(std::vector<std::string>& details) {
  bool ok = true;
  for (std::int64_t p = 3; p <= 15; p += 2) {
    const auto r = alexander::check_low_coefficients(p);
    details.push_back("p=" + std::to_string(p) + ": a_0..a_" + std::to_string((p - 1) / 2) + " = " + join(r.low_coeffs) +
                      (r.passed() ? " ok" : " FAIL"));
    ok = ok && r.passed();
  }
  return ok;
}

bool independent_squarefree_coprime(const std::vector<BigInt>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!oracle::gmp_squarefree(values[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (boost::multiprecision::gcd(values[i], values[j]) != 1) return false;
  }
  return true;
}

bool sequences(std::vector<std::string>& details) {
  bool ok = true;
  auto check = [&](const std::string& name, const std::vector<std::int64_t>& terms, const std::vector<BigInt>& values) {
    const bool good = terms.size() == 3 && independent_squarefree_coprime(values);
    std::vector<std::string> shown;
    for (const auto& v : values) shown.push_back(v.str());
    details.push_back(name + ": terms " + join(terms) + "; values " + join(shown) + (good ? " ok" : " FAIL"));
    ok = ok && good;
  };
  for (const auto& spec : {sieve::QuadraticSpec(20, 8, 5), sieve::QuadraticSpec(-1, 0, 2)}) {
    const auto terms = sieve::multiplier_sequence(spec, 3, 100000);
    std::vector<BigInt> values;
    for (auto s : terms) values.push_back(spec.value(s));
    check("construction f = " + std::to_string(spec.c2()) + "x^2 + " + std::to_string(spec.c1()) + "x + 1, alpha " +
              std::to_string(spec.alpha()),
          terms, values);
  }
  {
    const auto terms = sieve::family_twotorsion(3);
    std::vector<BigInt> values;
    for (auto n : terms) values.push_back(BigInt(20) * n * n + 8 * n + 1);
    check("two-torsion family", terms, values);
  }
  {
    const auto terms = sieve::family_torus_pairs(3);
    std::vector<BigInt> values;
    for (auto p : terms) values.push_back(BigInt(p) * (p + 2));
    check("torus pair family", terms, values);
  }
  return ok;
}

bool cross_oracles(std::vector<std::string>& details) {
  bool ok = true;
  int knots = 0;
  for (std::int64_t p = 2; p * (p + 1) <= 200; ++p)
    for (std::int64_t q = p + 1; p * q <= 200; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++knots;
      const auto delta = alexander::torus_alexander(p, q);
      const auto c = cfk::staircase(delta);
      const auto t = alexander::torsion_coeffs(delta);
      for (int s = 0; s <= delta.genus(); ++s) {
        const int pos = cfk::tilde_d(c, s);
        if (pos != -2 * t[static_cast<std::size_t>(s)] || cfk::tilde_d(c, -s) != pos - 2 * s) {
          ok = false;
          details.push_back("T(" + std::to_string(p) + "," + std::to_string(q) + ") s=" + std::to_string(s));
        }
      }
    }
  details.push_back(std::to_string(knots) + " torus knots with pq <= 200");
  const auto unknot = cfk::staircase(alexander::SymmetricLaurentPoly());
  for (std::int64_t n : {5, 7, 15}) {
    const lens::LensSpace L(n, 1);
    for (std::int64_t s = -(n - 1) / 2; s <= (n - 1) / 2; ++s)
      if (cfk::d_surgery(unknot, n, s) != lens::d_lens(L, lens::SpincIndex(L, std::abs(s)))) {
        ok = false;
        details.push_back("unknot n=" + std::to_string(n) + " s=" + std::to_string(s));
      }
  }
  details.push_back("unknot surgeries match L(n,1) for n = 5, 7, 15");
  return ok;
}

}  // namespace

int main() {
  criterion(1, "closed form for d(L(pq,1)) on 10 random pairs", closed_form_identity);
  criterion(2, "defect -2 at (1,1) and piecewise closed forms on L(pq,1)", lens_pq_defects);
  criterion(3, "L(4r^2+1,2r): Spin label, zero d-value, closed form", chain_family);
  criterion(4, "two-torsion family defect 4 and L(2705,52) timing", twotorsion);
  criterion(5, "surgery tilde_d and shifted sequences for T(3,5) and T(3,5) # D", surgery_sequences);
  criterion(6, "surgery charts for n = 15 and n = 35", surgery_charts);
  criterion(7, "L(65,8) and L(33,13) charts up to relabeling, exact verdicts", lens_charts);
  criterion(8, "parity table for T(p,p+2) and T(9,11) timing", parity_table);
  criterion(9, "metabolizer properties by exhaustion", metabolizer_theorems);
  criterion(10, "T(p,p+2) coefficient theorem, p = 3..15", coefficient_theorem);
  criterion(11, "square-free coprime sequences", sequences);
  criterion(12, "staircase and unknot cross-oracles", cross_oracles);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
