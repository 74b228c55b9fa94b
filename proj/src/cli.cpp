#include "hfsplit/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfsplit/errors.hpp"
#include "hfsplit/fixtures.hpp"
#include "hfsplit/lens_d.hpp"
#include "hfsplit/linking_forms.hpp"
#include "hfsplit/obstruction.hpp"
#include "hfsplit/sieve.hpp"

namespace hfsplit::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum class Format { markdown, csv, json };

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "markdown, csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"markdown", Format::markdown}, {"csv", Format::csv}, {"json", Format::json}},
          CLI::ignore_case))
      ->default_str("markdown");
}

lens::Orientation parse_orientation(const std::string& s) {
  if (s == "standard") return lens::Orientation::standard;
  if (s == "reversed") return lens::Orientation::reversed;
  throw InvalidInput("orientation must be standard or reversed");
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const Rational r = parse_rational(item);
    if (!is_integer(r)) throw InvalidInput("expected an integer: " + item);
    out.push_back(to_int64(r));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

void markdown_table(std::ostream& out, const LabeledTable& t, const Rational& scale) {
  out << "| a \\ b |";
  for (auto b : t.col_labels) out << ' ' << b << " |";
  out << "\n|---|";
  for (std::size_t k = 0; k < t.col_labels.size(); ++k) out << "---|";
  out << '\n';
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    out << "| " << t.row_labels[r] << " |";
    for (const auto& v : t.cells[r]) out << ' ' << to_string(v * scale) << " |";
    out << '\n';
  }
}

ordered_json table_json(const LabeledTable& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.cells) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

// --- lens-d -----------------------------------------------------------------------------------

struct LensArgs {
  std::int64_t m = 0, n = 0;
  std::optional<std::int64_t> i;
  bool all = false;
  std::string orientation = "standard";
  Format format = Format::markdown;
};

void cmd_lens_d(const LensArgs& a, std::ostream& out) {
  const lens::LensSpace L(a.m, a.n);
  const auto o = parse_orientation(a.orientation);
  std::vector<std::int64_t> labels;
  if (a.all) {
    for (std::int64_t i = 0; i < L.m(); ++i) labels.push_back(i);
  } else {
    if (!a.i) throw InvalidInput("lens-d needs a label i or --all");
    labels.push_back(lens::SpincIndex(L, *a.i).value());
  }
  const std::string spec = "lens-d " + std::to_string(a.m) + " " + std::to_string(a.n);
  const std::string convention = std::string("orientation=") + lens::to_string(o);
  switch (a.format) {
    case Format::markdown:
      out << "d(L(" << a.m << "," << a.n << "), s_i), " << convention << "\n\n| i | d | " << a.m << "·d |\n|---|---|---|\n";
      for (auto i : labels) {
        const Rational d = lens::d_lens(L, lens::SpincIndex(L, i), o);
        out << "| " << i << " | " << to_string(d) << " | " << to_string(d * a.m) << " |\n";
      }
      break;
    case Format::csv:
      out << "i,d,scaled\n";
      for (auto i : labels) {
        const Rational d = lens::d_lens(L, lens::SpincIndex(L, i), o);
        out << i << ',' << to_string(d) << ',' << to_string(d * a.m) << '\n';
      }
      break;
    case Format::json: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["spec"] = spec;
      j["convention"] = convention;
      j["scale"] = a.m;
      j["rows"] = ordered_json::array();
      for (auto i : labels) {
        const Rational d = lens::d_lens(L, lens::SpincIndex(L, i), o);
        j["rows"].push_back({{"i", i}, {"d", to_string(d)}, {"scaled", to_string(d * a.m)}});
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
}

// --- defect -----------------------------------------------------------------------------------

struct DefectArgs {
  std::vector<std::int64_t> lens;
  std::vector<std::int64_t> surgery;
  bool doubled = false;
  std::optional<std::int64_t> chain;
  std::string orientation = "reversed";
  Format format = Format::markdown;
};

void cmd_defect(const DefectArgs& a, std::ostream& out) {
  const int chosen = !a.lens.empty() + !a.surgery.empty() + a.chain.has_value();
  if (chosen != 1) throw InvalidInput("defect needs exactly one of --lens, --surgery, --chain");
  if (a.doubled && a.surgery.empty()) throw InvalidInput("--double applies to --surgery only");
  obstruction::ManifoldSpec spec;
  if (!a.lens.empty()) {
    spec = obstruction::Lens{a.lens[0], a.lens[1], a.lens[2], a.lens[3], parse_orientation(a.orientation)};
  } else if (!a.surgery.empty()) {
    if (a.doubled)
      spec = obstruction::SurgeryTorusDouble{a.surgery[0], a.surgery[1]};
    else
      spec = obstruction::SurgeryTorus{a.surgery[0], a.surgery[1]};
  } else {
    if (*a.chain < 1) throw InvalidInput("--chain needs n >= 1");
    spec = obstruction::ChainLens{5 * *a.chain + 1};
  }
  const auto rep = obstruction::defect_table(spec);
  switch (a.format) {
    case Format::markdown:
      out << "**" << rep.spec << "** (" << rep.convention << ")\n\n"
          << rep.scale << " · dbar(a, b)\n\n";
      markdown_table(out, rep.dbar, rep.scale);
      out << "\ndefect dbar(a,b) - dbar(a,0) - dbar(0,b)\n\n";
      markdown_table(out, rep.defect, 1);
      out << "\nverdict: " << obstruction::to_string(rep.verdict) << '\n';
      if (!rep.witnesses.empty()) {
        out << "witnesses:";
        for (const auto& w : rep.witnesses) out << " (" << w.a << "," << w.b << ")=" << to_string(w.value);
        out << '\n';
      }
      break;
    case Format::csv:
      out << "# spec=" << rep.spec << "\n# convention=" << rep.convention << "\n# scale=" << rep.scale
          << "\n# verdict=" << obstruction::to_string(rep.verdict) << "\ntable,a,b,value\n";
      for (const auto* t : {&rep.dbar, &rep.defect})
        for (std::size_t r = 0; r < t->row_labels.size(); ++r)
          for (std::size_t c = 0; c < t->col_labels.size(); ++c)
            out << (t == &rep.dbar ? "dbar," : "defect,") << t->row_labels[r] << ',' << t->col_labels[c] << ','
                << to_string(t->cells[r][c]) << '\n';
      break;
    case Format::json: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["spec"] = rep.spec;
      j["convention"] = rep.convention;
      j["scale"] = rep.scale;
      j["row_labels"] = rep.defect.row_labels;
      j["col_labels"] = rep.defect.col_labels;
      j["table"] = table_json(rep.defect);
      j["dbar"] = table_json(rep.dbar);
      j["verdict"] = obstruction::to_string(rep.verdict);
      j["witnesses"] = ordered_json::array();
      for (const auto& w : rep.witnesses) j["witnesses"].push_back({{"a", w.a}, {"b", w.b}, {"value", to_string(w.value)}});
      out << j.dump(2) << '\n';
      break;
    }
  }
}

// --- sieve ------------------------------------------------------------------------------------

struct SieveArgs {
  std::optional<int> twotorsion;
  std::optional<int> torus_pairs;
  std::vector<std::int64_t> multiplier;  // c2 c1 alpha count
  std::int64_t cap = 100000;
  Format format = Format::markdown;
};

void cmd_sieve(const SieveArgs& a, std::ostream& out) {
  const int chosen = a.twotorsion.has_value() + a.torus_pairs.has_value() + !a.multiplier.empty();
  if (chosen != 1) throw InvalidInput("sieve needs exactly one of --twotorsion, --torus-pairs, --multiplier");
  std::string family;
  std::vector<std::int64_t> terms;
  std::vector<BigInt> values;
  if (a.twotorsion) {
    family = "twotorsion";
    terms = sieve::family_twotorsion(*a.twotorsion, a.cap);
    for (auto n : terms) values.push_back(BigInt(20) * n * n + 8 * n + 1);
  } else if (a.torus_pairs) {
    family = "torus-pairs";
    terms = sieve::family_torus_pairs(*a.torus_pairs, a.cap);
    for (auto p : terms) values.push_back(BigInt(p) * (p + 2));
  } else {
    const sieve::QuadraticSpec spec(a.multiplier[0], a.multiplier[1], a.multiplier[2]);
    if (a.multiplier[3] < 1 || a.multiplier[3] > 1000) throw InvalidInput("count must be in [1, 1000]");
    family = "multiplier " + std::to_string(a.multiplier[0]) + " " + std::to_string(a.multiplier[1]) + " " +
             std::to_string(a.multiplier[2]);
    terms = sieve::multiplier_sequence(spec, static_cast<int>(a.multiplier[3]), a.cap);
    for (auto s : terms) values.push_back(spec.value(s));
  }
  switch (a.format) {
    case Format::markdown:
      out << "| k | term | value |\n|---|---|---|\n";
      for (std::size_t k = 0; k < terms.size(); ++k) out << "| " << k + 1 << " | " << terms[k] << " | " << values[k] << " |\n";
      break;
    case Format::csv:
      out << "k,term,value\n";
      for (std::size_t k = 0; k < terms.size(); ++k) out << k + 1 << ',' << terms[k] << ',' << values[k] << '\n';
      break;
    case Format::json: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["family"] = family;
      j["terms"] = terms;
      j["values"] = ordered_json::array();
      for (const auto& v : values) j["values"].push_back(v.str());
      out << j.dump(2) << '\n';
      break;
    }
  }
}

// --- metabolizers -----------------------------------------------------------------------------

struct MetabolizerArgs {
  std::string group;
  std::string form;
  Format format = Format::markdown;
};

std::string element_text(const forms::Element& x) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
  return s + ")";
}

void cmd_metabolizers(const MetabolizerArgs& a, std::ostream& out) {
  const forms::FiniteAbelianGroup G(parse_int_list(a.group));
  const forms::LinkingForm f(G, parse_rational_list(a.form));
  const auto mets = forms::enumerate_metabolizers(f);
  switch (a.format) {
    case Format::markdown:
      out << mets.size() << " metabolizer(s)" << (f.is_nonsingular() ? "" : " (form is singular)") << '\n';
      for (const auto& M : mets) {
        out << "- <";
        const auto gens = M.generators();
        for (std::size_t k = 0; k < gens.size(); ++k) out << (k ? ", " : "") << element_text(gens[k]);
        out << "> order " << M.order() << '\n';
      }
      break;
    case Format::csv:
      out << "index,order,generators\n";
      for (std::size_t k = 0; k < mets.size(); ++k) {
        out << k << ',' << mets[k].order() << ",\"";
        const auto gens = mets[k].generators();
        for (std::size_t g = 0; g < gens.size(); ++g) out << (g ? " " : "") << element_text(gens[g]);
        out << "\"\n";
      }
      break;
    case Format::json: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["group"] = G.cyclic_orders();
      j["nonsingular"] = f.is_nonsingular();
      j["metabolizers"] = ordered_json::array();
      for (const auto& M : mets) j["metabolizers"].push_back({{"order", M.order()}, {"generators", M.generators()}});
      out << j.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"d-invariants, linking forms and the additivity obstruction", "hfsplit"};
  app.require_subcommand(1);

  LensArgs lens_args;
  auto* lens_cmd = app.add_subcommand("lens-d", "d-invariants of a lens space");
  lens_cmd->add_option("m", lens_args.m)->required();
  lens_cmd->add_option("n", lens_args.n)->required();
  lens_cmd->add_option("i", lens_args.i);
  lens_cmd->add_flag("--all", lens_args.all, "every label");
  lens_cmd->add_option("--orientation", lens_args.orientation, "standard (d of L) or reversed (d of -L)");
  add_format(lens_cmd, lens_args.format);

  DefectArgs defect_args;
  auto* defect_cmd = app.add_subcommand("defect", "additivity defect table and verdict");
  defect_cmd->add_option("--lens", defect_args.lens, "m n m1 m2")->expected(4);
  defect_cmd->add_option("--surgery", defect_args.surgery, "p q")->expected(2);
  defect_cmd->add_flag("--double", defect_args.doubled, "connect sum with the doubled trefoil model");
  defect_cmd->add_option("--chain", defect_args.chain, "L(4r^2+1, 2r) with r = 5n+1");
  defect_cmd->add_option("--orientation", defect_args.orientation, "lens orientation (default reversed)");
  add_format(defect_cmd, defect_args.format);

  bool regen = false, check = false;
  std::string dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "regenerate or verify golden tables");
  auto* regen_opt = fixtures_cmd->add_flag("--regen", regen);
  fixtures_cmd->add_flag("--check", check)->excludes(regen_opt);
  fixtures_cmd->add_option("--dir", dir, "fixture directory (default $HFSPLIT_FIXTURE_DIR or the source tree)");

  SieveArgs sieve_args;
  auto* sieve_cmd = app.add_subcommand("sieve", "square-free coprime sequences");
  sieve_cmd->add_option("--twotorsion", sieve_args.twotorsion, "count");
  sieve_cmd->add_option("--torus-pairs", sieve_args.torus_pairs, "count");
  sieve_cmd->add_option("--multiplier", sieve_args.multiplier, "c2 c1 alpha count")->expected(4);
  sieve_cmd->add_option("--cap", sieve_args.cap, "search cap");
  add_format(sieve_cmd, sieve_args.format);

  MetabolizerArgs met_args;
  auto* met_cmd = app.add_subcommand("metabolizers", "all metabolizers of a linking form");
  met_cmd->add_option("--group", met_args.group, "cyclic orders, e.g. 3,9")->required();
  met_cmd->add_option("--form", met_args.form, "row-major pairing matrix, e.g. 1/3,0,0,2/3")->required();
  add_format(met_cmd, met_args.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (lens_cmd->parsed()) cmd_lens_d(lens_args, out);
    else if (defect_cmd->parsed()) cmd_defect(defect_args, out);
    else if (sieve_cmd->parsed()) cmd_sieve(sieve_args, out);
    else if (met_cmd->parsed()) cmd_metabolizers(met_args, out);
    else if (fixtures_cmd->parsed()) {
      if (regen == check) throw InvalidInput("fixtures needs --regen or --check");
      const std::filesystem::path where = dir.empty() ? fixtures::default_dir() : std::filesystem::path(dir);
      if (regen) {
        out << "wrote " << fixtures::regenerate(where) << " fixtures to " << where.string() << '\n';
      } else {
        const auto bad = fixtures::check(where);
        for (const auto& m : bad) out << m.fixture << ": " << m.detail << '\n';
        if (!bad.empty()) return kFixtureMismatch;
        out << "all fixtures match\n";
      }
    }
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const AmbiguousSpin& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotAMetabolizer& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotStaircase& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotStabilized& e) {
    err << "stabilization failure: " << e.what() << '\n';
    return kNotStabilized;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << " (found " << e.partial.size() << " terms)\n";
    return kLimitReached;
  } catch (const TooLarge& e) {
    err << "too large: " << e.what() << '\n';
    return kLimitReached;
  }
  return kOk;
}

}  // namespace hfsplit::cli
