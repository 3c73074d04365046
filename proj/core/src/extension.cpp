#include <set>

#include "liftable/error.hpp"
#include "liftable/presentation.hpp"

namespace liftable {

LiftData LiftData::power_conjugation(const Presentation& n, const Presentation& q, std::vector<std::string> lift_names,
                                     std::span<const std::int64_t> exponents) {
  if (exponents.size() != q.num_generators()) throw DomainError("need one conjugation exponent per quotient generator");
  LiftData d;
  d.lift_names = std::move(lift_names);
  for (const auto e : exponents) {
    std::vector<Word> row;
    for (std::size_t a = 0; a < n.num_generators(); ++a) row.push_back(Word::power_of(static_cast<int>(a), static_cast<int>(e)));
    d.conjugation.push_back(std::move(row));
  }
  d.evaluations.assign(q.relators().size(), Evaluation{});
  return d;
}

Presentation extension_presentation(const Presentation& n, const Presentation& q, const LiftData& data) {
  const std::size_t nk = n.num_generators();
  const std::size_t nq = q.num_generators();
  if (data.lift_names.size() != nq) throw DomainError("need one lift name per quotient generator");
  if (data.conjugation.size() != nq) throw DomainError("missing conjugation words for some lifted generator");
  if (data.evaluations.size() != q.relators().size()) throw DomainError("missing evaluation for some quotient relator");
  if (q.has_symbolic()) throw DomainError("quotient presentation must have numeric relators");

  std::vector<std::string> names = n.generators();
  std::set<std::string> seen(names.begin(), names.end());
  for (const auto& l : data.lift_names) {
    if (!seen.insert(l).second) throw DomainError("lift name " + l + " clashes with another generator");
    names.push_back(l);
  }
  const auto check_kernel = [&](const Word& w, const char* what) {
    if (w.max_generator() >= static_cast<int>(nk)) throw DomainError(std::string(what) + " uses a non-kernel generator");
  };
  const auto lift = [&](const Word& w) {
    std::vector<Letter> ls = w.letters();
    for (auto& l : ls) l.gen += static_cast<int>(nk);
    return Word(std::move(ls));
  };

  std::vector<Word> rels = n.relators();
  std::vector<SymbolicRelator> sym = n.symbolic_relators();
  for (std::size_t r = 0; r < q.relators().size(); ++r) {
    const auto& ev = data.evaluations[r];
    check_kernel(ev.word, "evaluation");
    const Word lifted = lift(q.relators()[r]);
    if (ev.symbolic) {
      if (ev.symbolic->first < 0 || ev.symbolic->first >= static_cast<int>(nk)) {
        throw DomainError("symbolic evaluation must be a power of a kernel generator");
      }
      sym.push_back({lifted * ev.word.inverse(), ev.symbolic->first, ev.symbolic->second});
    } else {
      rels.push_back(lifted * ev.word.inverse());
    }
  }
  for (std::size_t g = 0; g < nq; ++g) {
    if (data.conjugation[g].size() != nk) throw DomainError("missing conjugation word for lift " + data.lift_names[g]);
    const Word s = Word::power_of(static_cast<int>(nk + g), 1);
    for (std::size_t a = 0; a < nk; ++a) {
      check_kernel(data.conjugation[g][a], "conjugation word");
      rels.push_back(s * Word::power_of(static_cast<int>(a), 1) * s.inverse() * data.conjugation[g][a].inverse());
    }
  }
  return Presentation(std::move(names), std::move(rels), std::move(sym));
}

}  // namespace liftable
