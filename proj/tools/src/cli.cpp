#include "liftable_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liftable/error.hpp"

namespace liftable::cli {

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

// Thrown to report a data set that fails validation.
struct InvalidInput {
  std::string message;
  Json json;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> half_twist_names(int k) {
  std::vector<std::string> names;
  for (int i = 1; i < k; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

std::string violation_list(const ValidationReport& v) {
  std::vector<std::string> names;
  for (auto x : v.violations) names.emplace_back(to_string(x));
  return join(names, ", ");
}

DataSet checked_dataset(const std::string& text, bool need_genus_two) {
  const DataSet d = parse_dataset(text);
  const ValidationReport v = validate(d);
  Json j{{"dataset", format_dataset(d)}, {"validation", to_json(v)}};
  if (!v.valid()) throw InvalidInput{"invalid data set " + format_dataset(d) + ": " + violation_list(v), j};
  if (need_genus_two && v.scope_genus) {
    throw InvalidInput{"data set " + format_dataset(d) + " has genus " + std::to_string(*v.genus) + " < 2", j};
  }
  if (need_genus_two && d.orbifold_genus() != 0) {
    throw InvalidInput{"data set " + format_dataset(d) + " is not spherical (g0 != 0)", j};
  }
  return d;
}

std::string render_subgroup(const std::string& label, const SubgroupPresentation& s) {
  std::ostringstream o;
  if (s.index == 1 && label == "LMod") o << "LMod = Mod(S_{0," << s.degree << "})\n";
  o << label << " presentation: " << s.presentation.to_string() << "\n";
  o << label << " abelianization: " << abelianization(s.presentation).to_string() << "\n";
  o << label << " Schreier generators: " << s.schreier_generators << " (index " << s.index << ")\n";
  const auto names = half_twist_names(s.degree);
  for (std::size_t i = 0; i < s.generator_words.size(); ++i) {
    o << "  " << s.presentation.generators()[i] << " = " << format_word(s.generator_words[i], names) << "\n";
  }
  return o.str();
}

std::string render_normalizer(const NormalizerPair& nc) {
  std::ostringstream o;
  const auto one = [&](const char* label, const NormalizerSpec& s) {
    o << label << " = " << s.presentation.to_string() << "  [" << to_string(s.provenance) << "]\n";
    if (s.descriptor) o << label << " ≅ " << s.descriptor->to_string() << "\n";
    for (const auto& n : s.notes) o << "  note: " << n << "\n";
  };
  one("N(F)", nc.normalizer);
  one("C(F)", nc.centralizer);
  return o.str();
}

std::string render_validation(const DataSet& d, const ValidationReport& v) {
  std::ostringstream o;
  o << format_dataset(d) << ": ";
  if (v.valid()) {
    o << "valid, genus " << *v.genus;
    if (v.scope_genus) o << " (below 2: outside the analysis range)";
  } else {
    o << "invalid: " << violation_list(v);
  }
  o << "\n";
  return o.str();
}

std::string render_classification(const IrreducibleClass& c) {
  std::ostringstream o;
  o << "case (" << to_string(c.label) << ")";
  if (c.label != IrreducibleCase::iii) o << " with l = " << c.unit;
  o << "\nLMod ≅ " << c.lmod.to_string() << "\nN(F) ≅ " << c.normalizer.to_string() << "\nC(F) ≅ "
    << c.centralizer.to_string() << "\n";
  if (c.structure_asserted) o << "note: direct-product structure asserted\n";
  if (!c.order_bound_holds) o << "warning: order bound n <= 2g+2 fails\n";
  return o.str();
}

std::string render_verification(const MatrixVerification& v) {
  std::ostringstream o;
  for (const auto& c : v.checks) o << (c.holds ? "PASS  " : "FAIL  ") << c.relation << "\n";
  o << "exponents (relation = F^i):\n";
  for (const auto& e : v.exponents) {
    o << "  " << e.name << ": " << e.relation << " computed " << (e.computed ? std::to_string(*e.computed) : "none")
      << ", stated " << e.stated << (e.agrees ? "" : "  (differs)") << "\n";
  }
  o << (v.all_relations_hold ? "all relations hold\n" : "some relations fail\n");
  return o.str();
}

}  // namespace

std::string render_report(const AnalysisReport& r, const NormalizerPair* nc, Format format) {
  if (format == Format::json) return to_json(r, nc).dump(2) + "\n";
  std::ostringstream o;
  const auto names = half_twist_names(r.gamma.size());
  o << "data set: " << format_dataset(r.dataset) << "\n";
  o << "genus: " << r.genus << "\n";
  o << "gamma: " << r.gamma.to_string() << "\n";
  if (!r.families.empty()) o << "families: " << join(r.families, ", ") << "\n";
  o << "|H1| = " << r.stab.h1.order() << ", |H2| = " << r.stab.h2.order() << "\n";
  std::vector<std::string> units, b, c;
  for (auto u : r.stab.units_sub) units.push_back(std::to_string(u));
  for (const auto& [i, j] : r.stab.b) b.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (const auto& [l, w] : r.stab.c) c.push_back(std::to_string(l) + " -> " + format_word(w, names));
  o << "units: " << join(units, ", ") << "\n";
  o << "B: " << (b.empty() ? "none" : join(b, " ")) << "\n";
  o << "C: " << join(c, "; ") << "\n";
  o << "[Mod:LMod] = " << r.stab.index_mod_lmod << "\n";
  o << "[N:C] = " << r.stab.index_n_c << "\n";
  o << "Mod = LMod: " << (r.mod_equals_lmod ? "yes" : "no") << "\n";
  if (r.lmod) {
    o << render_subgroup("LMod", *r.lmod);
  } else {
    o << "LMod presentation: not computed (index above limit)\n";
  }
  if (r.clmod) {
    o << render_subgroup("CLMod", *r.clmod);
  } else {
    o << "CLMod presentation: not computed (index above limit)\n";
  }
  if (r.classification) o << render_classification(*r.classification);
  if (nc) o << render_normalizer(*nc);
  return o.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Liftable mapping class groups of spherical cyclic actions", "liftable"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int jobs = 1;
  std::string out_path;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write output to this file");

  std::string dataset_text;
  int genus = 0;
  std::string present_kind, present_arg;
  bool simplify = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a cyclic data set and report its genus");
  validate_cmd->add_option("dataset", dataset_text, "Data set, e.g. (7,0;(1,7),(2,7),(4,7))")->required();
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List spherical cyclic actions of a genus");
  enumerate_cmd->add_option("genus", genus, "Surface genus")->required()->check(CLI::Range(2, 30));
  auto* analyze_cmd = app.add_subcommand("analyze", "Liftable subgroups, presentations and normalizer");
  analyze_cmd->add_option("dataset", dataset_text)->required();
  auto* present_cmd = app.add_subcommand("present", "Print a presentation");
  present_cmd->add_option("kind", present_kind, "mod | pmod | lmod | clmod | normalizer | centralizer")
      ->required()
      ->check(CLI::IsMember({"mod", "pmod", "lmod", "clmod", "normalizer", "centralizer"}));
  present_cmd->add_option("argument", present_arg, "Number of points k, or a data set")->required();
  present_cmd->add_flag("--simplify", simplify, "Apply Tietze simplification (mod, pmod)");
  auto* classify_cmd = app.add_subcommand("classify", "Classify a three-point data set");
  classify_cmd->add_option("dataset", dataset_text)->required();
  auto* table_cmd = app.add_subcommand("table1", "Normalizers and centralizers of the genus-3 table");
  auto* verify_cmd = app.add_subcommand("verify", "Check the symplectic images of the doubled normalizer");

  std::vector<std::string> argv_store{"liftable"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  const Format format = format_name == "json" ? Format::json : Format::text;

  std::ostringstream buf;
  int status = 0;
  const auto emit = [&](const std::string& text, const Json& json) {
    buf << (format == Format::json ? json.dump(2) + "\n" : text);
  };
  try {
    if (validate_cmd->parsed()) {
      const DataSet d = parse_dataset(dataset_text);
      const ValidationReport v = validate(d);
      Json j{{"dataset", format_dataset(d)}};
      j.update(to_json(v));
      emit(render_validation(d, v), j);
      status = v.valid() ? 0 : kExitInvalid;
    } else if (enumerate_cmd->parsed()) {
      const auto sets = enumerate_spherical(genus, jobs);
      std::ostringstream text;
      Json list = Json::array();
      for (const auto& d : sets) {
        text << format_dataset(d) << "\n";
        list.push_back(format_dataset(d));
      }
      text << sets.size() << " classes\n";
      emit(text.str(), {{"genus", genus}, {"count", sets.size()}, {"datasets", list}});
    } else if (analyze_cmd->parsed()) {
      const AnalysisReport r = analyze(checked_dataset(dataset_text, true));
      std::optional<NormalizerPair> nc;
      try {
        nc = normalizer_centralizer(r);
      } catch (const DomainError&) {
        // Presentations skipped above the index limit.
      }
      buf << render_report(r, nc ? &*nc : nullptr, format);
    } else if (present_cmd->parsed()) {
      Presentation p;
      if (present_kind == "mod" || present_kind == "pmod") {
        int k = 0;
        try {
          k = std::stoi(present_arg);
        } catch (const std::exception&) {
          err << "present " << present_kind << " expects a number of points\n";
          return kExitUsage;
        }
        p = present_kind == "mod" ? mod_sphere_presentation(k) : pmod_sphere_presentation(k);
        if (simplify) p = tietze_simplify(p).presentation;
      } else {
        const AnalysisReport r = analyze(checked_dataset(present_arg, true));
        if (present_kind == "lmod" || present_kind == "clmod") {
          const auto& s = present_kind == "lmod" ? r.lmod : r.clmod;
          if (!s) throw CapacityError("presentation not computed: subgroup index above limit");
          p = s->presentation;
        } else {
          const NormalizerPair nc = normalizer_centralizer(r);
          p = (present_kind == "normalizer" ? nc.normalizer : nc.centralizer).presentation;
        }
      }
      emit(p.to_string() + "\n", to_json(p));
    } else if (classify_cmd->parsed()) {
      const DataSet d = checked_dataset(dataset_text, true);
      const GammaVector g = gamma_vector(d);
      if (g.size() != 3) {
        err << "classify needs a data set with exactly 3 branch points\n";
        return kExitUsage;
      }
      const IrreducibleClass c = classify_irreducible(g);
      Json j{{"dataset", format_dataset(d)}};
      j.update(to_json(c));
      emit(format_dataset(d) + "\n" + render_classification(c), j);
    } else if (table_cmd->parsed()) {
      const auto rows = table_genus3();
      emit(format_table(rows), to_json(rows));
    } else if (verify_cmd->parsed()) {
      const auto v = verify_doubled_matrices();
      emit(render_verification(v), to_json(v));
      status = v.all_relations_hold ? 0 : kExitInvalid;
    }
  } catch (const InvalidInput& e) {
    if (format == Format::json) {
      out << e.json.dump(2) << "\n";
    }
    err << e.message << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return kExitUsage;
    }
    f << buf.str();
  }
  return status;
}

}  // namespace liftable::cli
