#include "liftable_cli/cli.hpp"

namespace liftable::cli {

namespace {

std::vector<std::string> half_twist_names(int k) {
  std::vector<std::string> names;
  for (int i = 1; i < k; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

Json descriptor(const GroupDescriptor& g) {
  static constexpr const char* kinds[] = {"trivial", "cyclic", "direct_product", "semidirect"};
  Json j{{"kind", kinds[static_cast<int>(g.kind)]}, {"text", g.to_string()}, {"order", g.order()}};
  if (g.kind != GroupDescriptor::Kind::trivial) j["n"] = g.n;
  if (g.kind == GroupDescriptor::Kind::direct_product || g.kind == GroupDescriptor::Kind::semidirect) j["m"] = g.m;
  if (g.kind == GroupDescriptor::Kind::semidirect) j["twist"] = g.twist;
  return j;
}

}  // namespace

Json to_json(const DataSet& d) {
  Json pairs = Json::array();
  for (const auto& p : d.pairs()) pairs.push_back({p.d, p.order});
  return {{"text", format_dataset(d)}, {"n", d.degree()}, {"g0", d.orbifold_genus()}, {"pairs", pairs}};
}

Json to_json(const ValidationReport& v) {
  Json violations = Json::array();
  for (auto x : v.violations) violations.push_back(std::string(to_string(x)));
  return {{"valid", v.valid()},
          {"genus", v.genus ? Json(*v.genus) : Json(nullptr)},
          {"violations", violations},
          {"scope_genus", v.scope_genus}};
}

Json to_json(const Word& w, std::span<const std::string> names) {
  Json letters = Json::array();
  for (const auto& l : w.letters()) letters.push_back({names[static_cast<std::size_t>(l.gen)], l.exp});
  return letters;
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(to_json(r, p.generators()));
  Json sym = Json::array();
  for (const auto& s : p.symbolic_relators()) {
    sym.push_back({{"word", to_json(s.word, p.generators())},
                   {"generator", p.generators()[static_cast<std::size_t>(s.gen)]},
                   {"symbol", s.symbol}});
  }
  return {{"text", p.to_string()}, {"generators", p.generators()}, {"relators", rels}, {"symbolic", sym}};
}

Json to_json(const StabilizerReport& s) {
  const auto names = half_twist_names(s.gamma.size());
  Json b = Json::array();
  for (const auto& [i, j] : s.b) b.push_back({i, j});
  Json c = Json::object();
  for (const auto& [l, w] : s.c) c[std::to_string(l)] = w.empty() ? "" : format_word(w, names);
  Json delta = Json::object();
  for (const auto& [l, p] : s.delta) delta[std::to_string(l)] = p.to_string();
  return {{"n", s.gamma.modulus()},
          {"c", s.gamma.entries()},
          {"H1_order", s.h1.order()},
          {"H2_order", s.h2.order()},
          {"units", s.units_sub},
          {"B", b},
          {"C", c},
          {"delta", delta},
          {"index_mod_lmod", s.index_mod_lmod},
          {"index_n_c", s.index_n_c},
          {"brute_force_checked", s.stab.has_value()}};
}

Json to_json(const SubgroupPresentation& s) {
  const auto names = half_twist_names(s.degree);
  Json words = Json::array();
  for (const auto& w : s.generator_words) words.push_back(w.empty() ? "1" : format_word(w, names));
  return {{"index", s.index},
          {"free_cover_generators", s.free_cover_generators},
          {"schreier_generators", s.schreier_generators},
          {"presentation", to_json(s.presentation)},
          {"generator_words", words},
          {"abelianization", abelianization(s.presentation).to_string()},
          {"tietze_script", s.tietze_script}};
}

Json to_json(const IrreducibleClass& c) {
  return {{"case", std::string(to_string(c.label))},
          {"unit", c.unit},
          {"fixed_point", c.fixed_point},
          {"lmod", descriptor(c.lmod)},
          {"centralizer", descriptor(c.centralizer)},
          {"normalizer", descriptor(c.normalizer)},
          {"structure_asserted", c.structure_asserted},
          {"order_bound_holds", c.order_bound_holds}};
}

Json to_json(const NormalizerSpec& s) {
  return {{"provenance", std::string(to_string(s.provenance))},
          {"presentation", to_json(s.presentation)},
          {"conjugation_exponents", s.conjugation_exponents},
          {"descriptor", s.descriptor ? descriptor(*s.descriptor) : Json(nullptr)},
          {"notes", s.notes}};
}

Json to_json(const AnalysisReport& r, const NormalizerPair* nc) {
  Json j{{"schema", 1},
         {"dataset", to_json(r.dataset)},
         {"genus", r.genus},
         {"gamma", {{"n", r.gamma.modulus()}, {"c", r.gamma.entries()}}},
         {"stabilizer", to_json(r.stab)},
         {"lmod", r.lmod ? to_json(*r.lmod) : Json(nullptr)},
         {"clmod", r.clmod ? to_json(*r.clmod) : Json(nullptr)},
         {"classification", r.classification ? to_json(*r.classification) : Json(nullptr)},
         {"mod_equals_lmod", r.mod_equals_lmod},
         {"families", r.families}};
  j["normalizer"] = nc ? to_json(nc->normalizer) : Json(nullptr);
  j["centralizer"] = nc ? to_json(nc->centralizer) : Json(nullptr);
  return j;
}

Json to_json(const MatrixVerification& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"relation", c.relation}, {"holds", c.holds}});
  Json exps = Json::array();
  for (const auto& e : v.exponents) {
    exps.push_back({{"name", e.name},
                    {"relation", e.relation},
                    {"computed", e.computed ? Json(*e.computed) : Json(nullptr)},
                    {"stated", e.stated},
                    {"agrees", e.agrees}});
  }
  return {{"all_relations_hold", v.all_relations_hold}, {"checks", checks}, {"exponents", exps}};
}

Json to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"row", r.row},
                   {"dataset", format_dataset(r.dataset)},
                   {"gamma", r.gamma.entries()},
                   {"case", std::string(to_string(r.classification.label))},
                   {"normalizer", r.classification.normalizer.to_string()},
                   {"centralizer", r.classification.centralizer.to_string()},
                   {"lmod_abelianization", r.lmod_abelianization},
                   {"lifted_dataset", nullptr}});
  }
  return {{"rows", out}};
}

}  // namespace liftable::cli
