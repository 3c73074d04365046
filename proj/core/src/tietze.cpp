#include <algorithm>
#include <numeric>
#include <set>

#include "liftable/error.hpp"
#include "liftable/presentation.hpp"

namespace liftable {

namespace {

Word substitute(const Word& w, const std::vector<std::optional<Word>>& subst) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    const auto& s = subst[static_cast<std::size_t>(l.gen)];
    if (!s) {
      out.push_back(l);
      continue;
    }
    const Word piece = l.exp > 0 ? *s : s->inverse();
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word(std::move(out));
}

std::size_t count_gen(const Word& w, int g) {
  return static_cast<std::size_t>(std::count_if(w.letters().begin(), w.letters().end(), [g](const Letter& l) { return l.gen == g; }));
}

// r = u x^e v = 1 with x occurring once: x = u^-1 v^-1 for e = 1, x = v u for e = -1.
Word solve_for(const Word& r, int x) {
  const auto& ls = r.letters();
  const auto pos = std::find_if(ls.begin(), ls.end(), [x](const Letter& l) { return l.gen == x; });
  const Word u(std::vector<Letter>(ls.begin(), pos));
  const Word v(std::vector<Letter>(pos + 1, ls.end()));
  return pos->exp > 0 ? u.inverse() * v.inverse() : v * u;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& opts) {
  const std::size_t ngens = p.num_generators();
  std::vector<bool> alive(ngens, true), guarded(ngens, false);
  for (const auto& s : p.symbolic_relators()) guarded[static_cast<std::size_t>(s.gen)] = true;
  for (const auto& name : opts.protected_generators) {
    if (const int i = p.generator_index(name); i >= 0) guarded[static_cast<std::size_t>(i)] = true;
  }

  std::vector<Word> rels = p.relators();
  std::vector<SymbolicRelator> sym = p.symbolic_relators();
  TietzeResult res;
  const auto name = [&](int g) { return p.generators()[static_cast<std::size_t>(g)]; };

  const auto normalize = [&] {
    std::set<Word> seen;
    std::vector<Word> kept;
    std::size_t trivial = 0, duplicate = 0;
    for (const auto& r : rels) {
      Word c = r.cyclically_reduced();
      if (c.empty()) {
        ++trivial;
        continue;
      }
      if (!seen.insert(canonical_relator(c)).second) {
        ++duplicate;
        continue;
      }
      kept.push_back(std::move(c));
    }
    if (trivial) res.script.push_back("remove " + std::to_string(trivial) + " trivial relator(s)");
    if (duplicate) res.script.push_back("remove " + std::to_string(duplicate) + " duplicate relator(s)");
    rels = std::move(kept);
  };

  for (int round = 0; round < opts.max_rounds; ++round) {
    normalize();
    std::vector<std::size_t> occ(ngens, 0);
    for (const auto& r : rels)
      for (const auto& l : r.letters()) ++occ[static_cast<std::size_t>(l.gen)];
    for (const auto& s : sym)
      for (const auto& l : s.word.letters()) ++occ[static_cast<std::size_t>(l.gen)];

    std::vector<std::size_t> by_length(rels.size());
    std::iota(by_length.begin(), by_length.end(), 0);
    std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) { return rels[a].length() < rels[b].length(); });

    std::vector<std::optional<Word>> subst(ngens);
    std::vector<bool> used(ngens, false);
    std::vector<int> batch;
    const auto try_batch = [&](std::size_t max_len, bool bounded_growth) {
      for (std::size_t idx : by_length) {
        const Word& r = rels[idx];
        if (r.length() > max_len) break;
        bool blocked = false;
        for (const auto& l : r.letters()) blocked = blocked || subst[static_cast<std::size_t>(l.gen)].has_value();
        if (blocked) continue;
        // Highest-index generator occurring once, so earlier generators survive.
        int x = -1;
        for (const auto& l : r.letters()) {
          const auto g = static_cast<std::size_t>(l.gen);
          if (guarded[g] || used[g] || count_gen(r, l.gen) != 1) continue;
          if (bounded_growth && r.length() > 2 && (occ[g] - 1) * (r.length() - 2) > opts.max_growth) continue;
          x = std::max(x, l.gen);
        }
        if (x < 0) continue;
        subst[static_cast<std::size_t>(x)] = solve_for(r, x);
        for (const auto& l : r.letters()) used[static_cast<std::size_t>(l.gen)] = true;
        batch.push_back(x);
      }
    };
    try_batch(2, false);
    if (batch.empty()) try_batch(opts.max_eliminating_length, true);
    if (batch.empty()) break;

    for (auto& r : rels) r = substitute(r, subst);
    for (auto& s : sym) s.word = substitute(s.word, subst);
    for (auto& [g, w] : res.eliminated) w = substitute(w, subst);
    for (int x : batch) {
      const Word& w = *subst[static_cast<std::size_t>(x)];
      alive[static_cast<std::size_t>(x)] = false;
      res.eliminated.emplace(x, w);
      res.script.push_back("eliminate " + name(x) + " = " + format_word(w, p.generators()));
    }
  }
  normalize();

  std::vector<int> new_index(ngens, -1);
  std::vector<std::string> names;
  for (std::size_t g = 0; g < ngens; ++g) {
    if (!alive[g]) continue;
    new_index[g] = static_cast<int>(names.size());
    res.kept.push_back(static_cast<int>(g));
    names.push_back(p.generators()[g]);
  }
  const auto reindex = [&](const Word& w) {
    std::vector<Letter> ls = w.letters();
    for (auto& l : ls) l.gen = new_index[static_cast<std::size_t>(l.gen)];
    return Word(std::move(ls));
  };
  std::vector<Word> out_rels;
  for (const auto& r : rels) out_rels.push_back(reindex(r));
  std::vector<SymbolicRelator> out_sym;
  for (const auto& s : sym) out_sym.push_back({reindex(s.word), new_index[static_cast<std::size_t>(s.gen)], s.symbol});
  for (auto& [g, w] : res.eliminated) w = reindex(w);
  res.presentation = Presentation(std::move(names), std::move(out_rels), std::move(out_sym));
  return res;
}

}  // namespace liftable
