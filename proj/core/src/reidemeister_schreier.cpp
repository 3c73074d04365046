#include "liftable/error.hpp"
#include "liftable/presentation.hpp"

namespace liftable {

SchreierResult reidemeister_schreier(const Presentation& p, std::span<const Permutation> psi, const PermGroup& h) {
  const std::size_t ngens = p.num_generators();
  if (psi.size() != ngens) throw DomainError("need one permutation per generator");
  if (p.has_symbolic()) throw DomainError("cannot rewrite symbolic relators");
  const int k = h.degree();
  require_degree(psi, k, "reidemeister_schreier");

  SchreierResult out;
  out.table = coset_table(h, psi);
  const CosetTable& t = out.table;
  const std::uint64_t index = factorial(k) / h.order();
  if (static_cast<std::uint64_t>(t.num_cosets) != index) {
    throw DomainError("generator images reach " + std::to_string(t.num_cosets) + " of " + std::to_string(index) +
                      " cosets; the subgroup is not of finite index in their span");
  }
  out.index = t.num_cosets;
  out.free_cover_generators = static_cast<std::size_t>(t.num_cosets) * ngens;

  const std::size_t cosets = static_cast<std::size_t>(t.num_cosets);
  // Inverse action: back[c][j] = d with action[d][j] = c.
  std::vector<std::vector<int>> back(cosets, std::vector<int>(ngens, -1));
  for (std::size_t c = 0; c < cosets; ++c)
    for (std::size_t j = 0; j < ngens; ++j) back[static_cast<std::size_t>(t.action[c][j])][j] = static_cast<int>(c);

  // Transversal words in the input generators.
  std::vector<Word> rep(cosets);
  for (std::size_t c = 1; c < cosets; ++c) {
    const auto [parent, g] = t.parent[c];
    rep[c] = rep[static_cast<std::size_t>(parent)] * Word::power_of(g, 1);
  }

  // Schreier generator id per (coset, generator); -1 on tree edges.
  std::vector<std::vector<int>> sid(cosets, std::vector<int>(ngens, -1));
  std::vector<std::string> names;
  for (std::size_t c = 0; c < cosets; ++c) {
    for (std::size_t j = 0; j < ngens; ++j) {
      const auto target = static_cast<std::size_t>(t.action[c][j]);
      if (t.parent[target] == std::make_pair(static_cast<int>(c), static_cast<int>(j))) continue;
      sid[c][j] = static_cast<int>(names.size());
      names.push_back("x_" + std::to_string(c) + "_" + p.generators()[j]);
      out.generator_words.push_back(rep[c] * Word::power_of(static_cast<int>(j), 1) * rep[target].inverse());
    }
  }

  std::vector<Word> rels;
  rels.reserve(cosets * p.relators().size());
  for (const auto& r : p.relators()) {
    for (std::size_t c = 0; c < cosets; ++c) {
      std::vector<Letter> ls;
      std::size_t cur = c;
      for (const auto& l : r.letters()) {
        const auto j = static_cast<std::size_t>(l.gen);
        if (l.exp > 0) {
          if (sid[cur][j] >= 0) ls.push_back({sid[cur][j], 1});
          cur = static_cast<std::size_t>(t.action[cur][j]);
        } else {
          cur = static_cast<std::size_t>(back[cur][j]);
          if (sid[cur][j] >= 0) ls.push_back({sid[cur][j], -1});
        }
      }
      if (cur != c) throw DomainError("relator " + p.format(r) + " does not act trivially on the cosets");
      Word w(std::move(ls));
      if (!w.empty()) rels.push_back(std::move(w));
    }
  }
  out.presentation = Presentation(std::move(names), std::move(rels));
  return out;
}

}  // namespace liftable
