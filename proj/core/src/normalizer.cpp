#include "liftable/analysis.hpp"
#include "liftable/error.hpp"
#include "liftable/residue.hpp"

namespace liftable {

namespace {

Presentation cyclic_kernel(std::int64_t n) {
  return Presentation({"F"}, {Word::power_of(0, static_cast<int>(n))});
}

// Representative in (-n/2, n/2], so -1 prints as F^-1.
std::int64_t balanced(std::int64_t e, std::int64_t n) {
  e = mod(e, n);
  return 2 * e > n ? e - n : e;
}

std::vector<std::string> lift_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back("G" + std::to_string(i));
  return names;
}

NormalizerSpec assemble(const Presentation& q, std::int64_t n, std::vector<std::string> names,
                        const std::vector<std::int64_t>& exponents, const std::vector<LiftData::Evaluation>& evals,
                        Provenance prov) {
  const Presentation kernel = cyclic_kernel(n);
  std::vector<std::int64_t> balanced_exps;
  for (auto e : exponents) balanced_exps.push_back(balanced(e, n));
  LiftData data = LiftData::power_conjugation(kernel, q, std::move(names), balanced_exps);
  data.evaluations = evals;
  NormalizerSpec spec;
  spec.presentation = extension_presentation(kernel, q, data);
  for (auto e : exponents) spec.conjugation_exponents.push_back(mod(e, n));
  spec.provenance = prov;
  return spec;
}

std::vector<LiftData::Evaluation> trivial_evaluations(const Presentation& q) {
  return std::vector<LiftData::Evaluation>(q.relators().size());
}

std::vector<LiftData::Evaluation> symbolic_evaluations(const Presentation& q) {
  std::vector<LiftData::Evaluation> ev(q.relators().size());
  for (std::size_t r = 0; r < ev.size(); ++r) ev[r].symbolic = std::make_pair(0, "e_" + std::to_string(r + 1));
  return ev;
}

std::int64_t conjugation_unit(const StabilizerReport& stab, const Word& sigma_word) {
  const Permutation p = psi_image(sigma_word, stab.gamma.size());
  for (auto l : stab.units_sub) {
    if (act(l, p, stab.gamma) == stab.gamma) return l;
  }
  throw Error("lifted generator " + p.to_string() + " does not stabilize " + stab.gamma.to_string());
}

NormalizerSpec from_user(const Presentation& q, std::int64_t n, const LiftData& data, std::vector<std::int64_t> exps) {
  NormalizerSpec spec;
  spec.presentation = extension_presentation(cyclic_kernel(n), q, data);
  spec.conjugation_exponents = std::move(exps);
  spec.provenance = Provenance::user_supplied;
  return spec;
}

NormalizerSpec generic(const AnalysisReport& r, const SubgroupPresentation& q, bool centralizer,
                       const std::optional<LiftData>& user) {
  const std::int64_t n = r.gamma.modulus();
  std::vector<std::int64_t> exps;
  for (const auto& w : q.generator_words) exps.push_back(centralizer ? 1 : conjugation_unit(r.stab, w));
  if (user) return from_user(q.presentation, n, *user, std::move(exps));
  const bool free = q.presentation.relators().empty();
  NormalizerSpec spec = assemble(q.presentation, n, lift_names(q.presentation.num_generators()), exps,
                                 free ? trivial_evaluations(q.presentation) : symbolic_evaluations(q.presentation),
                                 free ? Provenance::derived : Provenance::symbolic);
  if (!free) spec.notes.emplace_back("lifted relators evaluate to unresolved powers F^{e_r}");
  return spec;
}

NormalizerPair irreducible(const AnalysisReport& r) {
  const IrreducibleClass& cls = *r.classification;
  const std::int64_t n = r.gamma.modulus();
  const Presentation kernel = cyclic_kernel(n);
  NormalizerSpec cyclic_spec;
  cyclic_spec.presentation = kernel;
  cyclic_spec.provenance = Provenance::built_in;
  cyclic_spec.descriptor = GroupDescriptor::cyclic(n);

  NormalizerPair out;
  out.centralizer = cyclic_spec;
  out.normalizer = cyclic_spec;
  if (cls.label == IrreducibleCase::iii) return out;

  const int m = cls.label == IrreducibleCase::i ? 3 : 2;
  const Presentation q({"G"}, {Word::power_of(0, m)});
  out.normalizer = assemble(q, n, {"G"}, {cls.unit}, trivial_evaluations(q), Provenance::built_in);
  out.normalizer.descriptor = cls.normalizer;
  out.normalizer.notes.emplace_back("G^" + std::to_string(m) + " = 1 taken from the group structure, not from a computed lift");
  if (cls.label == IrreducibleCase::ii_a) {
    out.normalizer.notes.emplace_back("direct-product structure asserted");
    out.centralizer = out.normalizer;
  }
  out.centralizer.descriptor = cls.centralizer;
  return out;
}

// Gamma = (g+1, g+1, c, -c) mod 2g+2, g even.
std::optional<std::int64_t> doubled_top_order_genus(const AnalysisReport& r) {
  const auto& gm = r.gamma;
  const std::int64_t n = gm.modulus();
  if (gm.size() != 4 || n % 2 != 0) return std::nullopt;
  const std::int64_t g = (n - 2) / 2;
  if (g < 2 || g % 2 != 0 || r.genus != g) return std::nullopt;
  if (gm[1] != n / 2 || gm[2] != n / 2 || mod(gm[3] + gm[4], n) != 0) return std::nullopt;
  return g;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::built_in: return "built_in";
    case Provenance::user_supplied: return "user_supplied";
    case Provenance::derived: return "derived";
    case Provenance::symbolic: return "symbolic";
  }
  return "?";
}

Presentation doubled_lmod_presentation() {
  return parse_presentation("<s1, s3, a13 | s3^2 = s1^2, [s1,s3], (s1*a13)^2, (s3*a13)^2>");
}

Presentation doubled_clmod_presentation() { return parse_presentation("<s1, a13 | (s1*a13)^2>"); }

Presentation doubled_pure_lmod_presentation() { return parse_presentation("<a12, a13, d | d^2, [a12,d], [a13,d]>"); }

NormalizerPair doubled_top_order_normalizer(std::int64_t g) {
  if (g < 2 || g % 2 != 0) throw DomainError("built-in doubled normalizer needs an even genus >= 2");
  const std::int64_t n = 2 * g + 2;
  const auto f_pow = [](std::int64_t e) { return LiftData::Evaluation{Word::power_of(0, static_cast<int>(e)), std::nullopt}; };

  NormalizerPair out;
  const Presentation ql = doubled_lmod_presentation();
  // Lifts of s1, s3, a13; G1^2 = G3^2 and [G1,G3] = 1 hold exactly.
  out.normalizer = assemble(ql, n, {"G1", "G3", "G2"}, {1, -1, 1}, {f_pow(0), f_pow(0), f_pow(g + 2), f_pow(g + 1)},
                            Provenance::built_in);
  const Presentation qc = doubled_clmod_presentation();
  out.centralizer = assemble(qc, n, {"G1", "G2"}, {1, 1}, {f_pow(g + 2)}, Provenance::built_in);
  return out;
}

NormalizerPair normalizer_centralizer(const AnalysisReport& report, const std::optional<LiftData>& normalizer_lifts,
                                      const std::optional<LiftData>& centralizer_lifts) {
  const bool user = normalizer_lifts || centralizer_lifts;
  if (!user && report.classification) return irreducible(report);
  if (!user) {
    if (const auto g = doubled_top_order_genus(report)) return doubled_top_order_normalizer(*g);
  }
  if (!report.lmod || !report.clmod) throw DomainError("normalizer needs the LMod and CLMod presentations");
  NormalizerPair out;
  out.normalizer = generic(report, *report.lmod, false, normalizer_lifts);
  out.centralizer = generic(report, *report.clmod, true, centralizer_lifts);
  const char* convention = "conjugation convention: G F G^-1 = F^q(G)";
  out.normalizer.notes.emplace_back(convention);
  return out;
}

}  // namespace liftable
