#include <algorithm>
#include <numeric>

#include "liftable/analysis.hpp"
#include "liftable/error.hpp"
#include "liftable/residue.hpp"

namespace liftable {

namespace {

std::vector<std::string> family_tags(const GammaVector& gamma) {
  std::vector<std::string> tags;
  const std::int64_t n = gamma.modulus();
  const auto& c = gamma.entries();
  const int k = gamma.size();
  if (n == 2) tags.emplace_back("hyperelliptic");
  if (n >= 3 && k % 2 == 0 && std::gcd(c[0], n) == 1) {
    // Half the entries u, half -u.
    const auto u = c[0];
    const auto plus = std::count(c.begin(), c.end(), u);
    const auto minus = std::count(c.begin(), c.end(), mod(-u, n));
    if (plus == k / 2 && minus == k / 2) tags.emplace_back("superelliptic");
  }
  if (k == 4) {
    for (int j = 2; j <= 4; ++j) {
      std::vector<int> rest;
      for (int t = 2; t <= 4; ++t)
        if (t != j) rest.push_back(t);
      if (mod(gamma[1] + gamma[j], n) == 0 && mod(gamma[rest[0]] + gamma[rest[1]], n) == 0) {
        tags.emplace_back("doubled");
        break;
      }
    }
  }
  return tags;
}

}  // namespace

SubgroupPresentation subgroup_presentation(int k, const PermGroup& h, const TietzeOptions& tietze) {
  const Presentation mod = mod_sphere_presentation(k);
  std::vector<Permutation> psi;
  for (int i = 1; i < k; ++i) psi.push_back(Permutation::transposition(k, i, i + 1));
  SchreierResult rs = reidemeister_schreier(mod, psi, h);

  SubgroupPresentation out;
  out.degree = k;
  out.index = rs.index;
  out.free_cover_generators = rs.free_cover_generators;
  out.schreier_generators = rs.presentation.num_generators();
  if (rs.index == 1) {
    // The single coset: x_0_s_j is s_j itself.
    out.presentation = mod;
    out.generator_words = std::move(rs.generator_words);
    return out;
  }
  TietzeResult t = tietze_simplify(rs.presentation, tietze);
  out.presentation = std::move(t.presentation);
  for (int g : t.kept) out.generator_words.push_back(rs.generator_words[static_cast<std::size_t>(g)]);
  out.tietze_script = std::move(t.script);
  return out;
}

AnalysisReport analyze(const DataSet& d, const AnalyzeOptions& opts) {
  if (d.orbifold_genus() != 0) throw DomainError("analysis covers spherical data sets (g0 = 0) only");
  require_valid(d, "analyze");
  AnalysisReport r;
  r.dataset = d;
  r.genus = *riemann_hurwitz_genus(d);
  r.gamma = gamma_vector(d);
  r.stab = liftable_images(r.gamma, opts.liftable);
  const int k = r.gamma.size();

  if (r.stab.index_mod_lmod <= opts.max_presentation_index) r.lmod = subgroup_presentation(k, r.stab.h1, opts.tietze);
  if (factorial(k) / r.stab.h2.order() <= opts.max_presentation_index) {
    r.clmod = r.stab.h2 == r.stab.h1 && r.lmod ? *r.lmod : subgroup_presentation(k, r.stab.h2, opts.tietze);
  }
  if (k == 3) r.classification = classify_irreducible(r.gamma);
  r.mod_equals_lmod = mod_equals_lmod(r.gamma);
  if (r.mod_equals_lmod != r.stab.h1.is_symmetric()) {
    throw Error("full-liftability criterion disagrees with H1 for " + format_dataset(d));
  }
  r.families = family_tags(r.gamma);
  return r;
}

}  // namespace liftable
