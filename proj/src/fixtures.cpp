#include "hfsplit/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hfsplit/alexander.hpp"
#include "hfsplit/cfk.hpp"
#include "hfsplit/errors.hpp"
#include "hfsplit/obstruction.hpp"

#ifndef HFSPLIT_DEFAULT_FIXTURE_DIR
#define HFSPLIT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace hfsplit::fixtures {

namespace {

Fixture from_report(std::string name, const obstruction::ObstructionReport& rep, bool defect, std::int64_t scale) {
  return {std::move(name), rep.spec, rep.convention, scale, "a\\b", defect ? rep.defect : rep.dbar};
}

Fixture sequence(std::string name, std::string spec, std::string convention, std::int64_t scale,
                 const cfk::FilteredComplex& c, bool shifted) {
  LabeledTable t;
  t.row_labels = {0};
  t.cells.emplace_back();
  for (int s = -7; s <= 7; ++s) {
    t.col_labels.push_back(s);
    t.cells.front().push_back(shifted ? cfk::d_surgery(c, 15, s) : Rational(cfk::tilde_d(c, s)));
  }
  return {std::move(name), std::move(spec), std::move(convention), scale, "s", std::move(t)};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(line);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& s) {
  const Rational r = parse_rational(s);
  if (!is_integer(r)) throw InvalidInput("expected an integer, got " + s);
  return to_int64(r);
}

}  // namespace

std::vector<Fixture> compute_all() {
  using namespace obstruction;
  std::vector<Fixture> out;
  const auto l65 = defect_table(Lens{65, 8, 5, 13});
  out.push_back(from_report("l65_8_dbar", l65, false, 65));
  out.push_back(from_report("l65_8_defect", l65, true, 1));
  const auto t35 = defect_table(SurgeryTorus{3, 5});
  const auto t35d = defect_table(SurgeryTorusDouble{3, 5});
  out.push_back(from_report("t35_dbar", t35, false, 30));
  out.push_back(from_report("t35_double_dbar", t35d, false, 30));
  const auto t57 = defect_table(SurgeryTorus{5, 7});
  const auto t57d = defect_table(SurgeryTorusDouble{5, 7});
  out.push_back(from_report("t57_dbar", t57, false, 70));
  out.push_back(from_report("t57_double_dbar", t57d, false, 70));
  Fixture diff = from_report("t57_double_minus_plain", t57d, false, 1);
  diff.spec = "surgery 5 7 double minus surgery 5 7";
  for (std::size_t r = 0; r < diff.table.cells.size(); ++r)
    for (std::size_t c = 0; c < diff.table.cells[r].size(); ++c) diff.table.cells[r][c] -= t57.dbar.cells[r][c];
  out.push_back(std::move(diff));
  const auto l33 = concordance_example();
  out.push_back(from_report("l33_13_dbar", l33, false, 33));
  out.push_back(from_report("l33_13_defect", l33, true, 1));

  const auto knot = cfk::staircase(alexander::torus_alexander(3, 5));
  const auto doubled = cfk::tensor(knot, cfk::double_model());
  out.push_back(sequence("t35_tilde_d", "tilde_d 3 5", "quotient C/C{i<0,j<s}", 1, knot, false));
  out.push_back(sequence("t35_double_tilde_d", "tilde_d 3 5 double", "quotient C/C{i<0,j<s}", 1, doubled, false));
  out.push_back(sequence("t35_d", "surgery 15 on 3 5", "d=tilde_d-eta", 30, knot, true));
  out.push_back(sequence("t35_double_d", "surgery 15 on 3 5 double", "d=tilde_d-eta", 30, doubled, true));
  return out;
}

std::string to_csv(const Fixture& f) {
  std::ostringstream out;
  out << "# name=" << f.name << '\n'
      << "# spec=" << f.spec << '\n'
      << "# convention=" << f.convention << '\n'
      << "# scale=" << f.scale << '\n'
      << f.axes;
  for (auto b : f.table.col_labels) out << ',' << b;
  out << '\n';
  for (std::size_t r = 0; r < f.table.row_labels.size(); ++r) {
    out << f.table.row_labels[r];
    for (const auto& v : f.table.cells[r]) out << ',' << to_string(v * f.scale);
    out << '\n';
  }
  return out.str();
}

Fixture parse_csv(std::string_view text) {
  Fixture f;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw InvalidInput("malformed fixture header: " + line);
      const std::string key = line.substr(2, eq - 2);
      const std::string value = line.substr(eq + 1);
      if (key == "name") f.name = value;
      else if (key == "spec") f.spec = value;
      else if (key == "convention") f.convention = value;
      else if (key == "scale") f.scale = parse_int(value);
      else throw InvalidInput("unknown fixture header key: " + key);
      continue;
    }
    const auto fields = split(line, ',');
    if (!have_header) {
      f.axes = fields.at(0);
      for (std::size_t k = 1; k < fields.size(); ++k) f.table.col_labels.push_back(parse_int(fields[k]));
      have_header = true;
      continue;
    }
    if (fields.size() != f.table.col_labels.size() + 1) throw InvalidInput("fixture row has the wrong width");
    f.table.row_labels.push_back(parse_int(fields[0]));
    std::vector<Rational> row;
    for (std::size_t k = 1; k < fields.size(); ++k) row.push_back(parse_rational(fields[k]) / f.scale);
    f.table.cells.push_back(std::move(row));
  }
  if (!have_header || f.scale == 0) throw InvalidInput("fixture is missing its header");
  return f;
}

std::filesystem::path default_dir() {
  if (const char* env = std::getenv("HFSPLIT_FIXTURE_DIR"); env && *env) return env;
  return HFSPLIT_DEFAULT_FIXTURE_DIR;
}

std::size_t regenerate(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto all = compute_all();
  for (const auto& f : all) {
    std::ofstream out(dir / (f.name + ".csv"), std::ios::binary | std::ios::trunc);
    out << to_csv(f);
    if (!out) throw std::runtime_error("cannot write fixture " + f.name);
  }
  return all.size();
}

std::vector<Mismatch> check(const std::filesystem::path& dir) {
  std::vector<Mismatch> out;
  for (const auto& fresh : compute_all()) {
    const auto path = dir / (fresh.name + ".csv");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      out.push_back({fresh.name, "missing file " + path.string()});
      continue;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Fixture stored;
    try {
      stored = parse_csv(buf.str());
    } catch (const InvalidInput& e) {
      out.push_back({fresh.name, std::string("unreadable: ") + e.what()});
      continue;
    }
    if (stored.spec != fresh.spec || stored.convention != fresh.convention || stored.scale != fresh.scale)
      out.push_back({fresh.name, "header differs (spec, convention or scale)"});
    if (stored.table.row_labels != fresh.table.row_labels || stored.table.col_labels != fresh.table.col_labels) {
      out.push_back({fresh.name, "labels differ"});
      continue;
    }
    for (std::size_t r = 0; r < fresh.table.row_labels.size(); ++r)
      for (std::size_t c = 0; c < fresh.table.col_labels.size(); ++c) {
        const Rational& want = fresh.table.cells[r][c];
        const Rational& got = stored.table.cells[r][c];
        if (want == got) continue;
        const std::string a = std::to_string(fresh.table.row_labels[r]);
        const std::string b = std::to_string(fresh.table.col_labels[c]);
        const std::string where = fresh.axes == "s" ? "s=" + b : "a=" + a + ", b=" + b;
        std::ostringstream msg;
        msg << "cell (" << where << "): stored " << to_string(got * fresh.scale) << ", computed "
            << to_string(want * fresh.scale);
        out.push_back({fresh.name, msg.str()});
      }
  }
  return out;
}

}  // namespace hfsplit::fixtures
