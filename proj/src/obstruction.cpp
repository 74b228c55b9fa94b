#include "hfsplit/obstruction.hpp"

#include <numeric>
#include <stdexcept>

#include "hfsplit/alexander.hpp"
#include "hfsplit/cfk.hpp"
#include "hfsplit/errors.hpp"

namespace hfsplit::obstruction {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_split(std::int64_t m, std::int64_t m1, std::int64_t m2) {
  if (m1 < 1 || m2 < 1 || m1 * m2 != m) throw InvalidInput("split must satisfy m1*m2 = |H_1|");
  if (std::gcd(m1, m2) != 1) throw InvalidInput("split orders must be coprime");
  if (m1 % 2 == 0 || m2 % 2 == 0) throw InvalidInput("split orders must be odd");
}

ObstructionReport lens_report(std::int64_t m, std::int64_t n, std::int64_t m1, std::int64_t m2,
                              lens::Orientation o, std::string spec) {
  check_split(m, m1, m2);
  const lens::LensSpace L(m, n);
  const auto spin = lens::spin_index(L).value();
  ObstructionReport rep;
  rep.spec = std::move(spec);
  rep.convention = std::string("orientation=") + lens::to_string(o) + ";label=a*m2+b*m1;spin=s_" + std::to_string(spin);
  rep.scale = m;
  rep.dbar.row_labels = centred_labels(m1, true);
  rep.dbar.col_labels = centred_labels(m2, false);
  for (auto a : rep.dbar.row_labels) {
    std::vector<Rational> row;
    for (auto b : rep.dbar.col_labels) row.push_back(lens::dbar(L, lens::split_label(m1, m2, a, b), o));
    rep.dbar.cells.push_back(std::move(row));
  }
  return rep;
}

ObstructionReport surgery_report(std::int64_t p, std::int64_t q, bool doubled, std::string spec) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) throw InvalidInput("surgery spec needs 2 <= p < q coprime");
  check_split(p * q, p, q);
  cfk::FilteredComplex c = cfk::staircase(alexander::torus_alexander(p, q));
  if (doubled) c = cfk::tensor(c, cfk::double_model());
  ObstructionReport rep;
  rep.spec = std::move(spec);
  rep.convention = "d=tilde_d-eta;label=a*m2+b*m1 centred;spin=s_0";
  rep.scale = 2 * p * q;
  rep.dbar = cfk::dbar_surgery_table(c, p * q, p, q);
  return rep;
}

void fill_defects(ObstructionReport& rep) {
  const LabeledTable& t = rep.dbar;
  rep.defect.row_labels = t.row_labels;
  rep.defect.col_labels = t.col_labels;
  for (auto a : t.row_labels) {
    std::vector<Rational> row;
    for (auto b : t.col_labels) {
      const Rational v = t.at(a, b) - t.at(a, 0) - t.at(0, b);
      row.push_back(v);
      if (v != 0) rep.witnesses.push_back({a, b, v});
    }
    rep.defect.cells.push_back(std::move(row));
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::no_obstruction : Verdict::obstructed;
}

}  // namespace

std::string describe(const ManifoldSpec& spec) {
  auto s = [](std::int64_t x) { return std::to_string(x); };
  return std::visit(
      Overloaded{
          [&](const Lens& l) {
            return "lens " + s(l.m) + " " + s(l.n) + " " + s(l.m1) + " " + s(l.m2) + " " +
                   lens::to_string(l.orientation);
          },
          [&](const SurgeryTorus& t) { return "surgery " + s(t.p) + " " + s(t.q); },
          [&](const SurgeryTorusDouble& t) { return "surgery " + s(t.p) + " " + s(t.q) + " double"; },
          [&](const ChainLens& c) { return "chain " + s(c.r); },
      },
      spec);
}

const char* to_string(Verdict v) {
  return v == Verdict::obstructed ? "obstructed: does not split" : "no obstruction from this test";
}

ObstructionReport defect_table(const ManifoldSpec& spec) {
  ObstructionReport rep = std::visit(
      Overloaded{
          [&](const Lens& l) { return lens_report(l.m, l.n, l.m1, l.m2, l.orientation, describe(spec)); },
          [&](const SurgeryTorus& t) { return surgery_report(t.p, t.q, false, describe(spec)); },
          [&](const SurgeryTorusDouble& t) { return surgery_report(t.p, t.q, true, describe(spec)); },
          [&](const ChainLens& c) {
            if (c.r < 1) throw InvalidInput("chain spec needs r >= 1");
            const std::int64_t m = 4 * c.r * c.r + 1;
            if (m % 5 != 0 || (m / 5) % 5 == 0)
              throw InvalidInput("chain spec needs 4r^2+1 = 5k with k prime to 5");
            return lens_report(m, 2 * c.r, 5, m / 5, lens::Orientation::standard, describe(spec));
          },
      },
      spec);
  fill_defects(rep);
  return rep;
}

bool lens_family_negativity(std::int64_t p, std::int64_t q) {
  if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 || std::gcd(p, q) != 1)
    throw InvalidInput("lens_family_negativity: p, q must be coprime odd integers >= 3");
  const lens::LensSpace L(p * q, 1);
  bool ok = true;
  for (std::int64_t a = -(p - 1) / 2; a <= (p - 1) / 2; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = -(q - 1) / 2; b <= (q - 1) / 2; ++b) {
      if (b == 0) continue;
      const Rational v = lens::delta_defect(L, p, q, a, b);
      // The closed forms cover a > 0; (a,b) and (-a,-b) have equal defects.
      const Rational closed = a > 0 ? lens::delta_closed_form(p, q, a, b) : lens::delta_closed_form(p, q, -a, -b);
      if (v >= 0 || v != closed) ok = false;
    }
  }
  return ok;
}

TwoTorsionReport twotorsion_defect(std::int64_t n) {
  if (n < 1) throw InvalidInput("twotorsion_defect: n must be positive");
  TwoTorsionReport rep;
  rep.n = n;
  rep.r = 5 * n + 1;
  rep.p = 20 * n * n + 8 * n + 1;
  const std::int64_t m = 5 * rep.p;
  const lens::LensSpace L(m, 2 * rep.r);
  rep.spin = lens::spin_index(L).value();
  if (rep.spin != 2 * rep.r * rep.r + rep.r) throw std::logic_error("twotorsion_defect: unexpected Spin label");
  const std::array<std::int64_t, 3> offsets{rep.p - 5, rep.p, -5};
  std::array<Rational, 3> rec, closed;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto label = lens::SpincIndex::wrap(L, rep.spin + offsets[k]);
    const std::int64_t x = label.value() / (2 * rep.r);
    const std::int64_t y = label.value() % (2 * rep.r);
    rep.labels[k] = {x, y};
    rec[k] = lens::d_lens(L, label);
    closed[k] = lens::d_chain_closed(rep.r, x, y);
  }
  rep.by_recursion = rec[0] - rec[1] - rec[2];
  rep.by_closed_form = closed[0] - closed[1] - closed[2];
  return rep;
}

ObstructionReport concordance_example() { return defect_table(Lens{33, 13, 3, 11}); }

std::vector<IndependenceEntry> independence_suite(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  std::vector<IndependenceEntry> out;
  for (const auto& [p, q] : pairs) out.push_back({p, q, lens_family_negativity(p, q)});
  return out;
}

}  // namespace hfsplit::obstruction
