#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftable/perm_group.hpp"
#include "liftable/smith.hpp"
#include "liftable/word.hpp"

namespace liftable {

/// word = gen^{symbol}: a relation whose exponent is an unresolved parameter.
struct SymbolicRelator {
  Word word;
  int gen = 0;
  std::string symbol;

  friend bool operator==(const SymbolicRelator&, const SymbolicRelator&) = default;
};

/// <generators | relators>; relators are words equal to 1.
class Presentation {
 public:
  Presentation() = default;
  /// Throws DomainError on duplicate or malformed names, or letters beyond the generator list.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               std::vector<SymbolicRelator> symbolic = {});

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const std::vector<SymbolicRelator>& symbolic_relators() const noexcept { return symbolic_; }
  std::size_t num_generators() const noexcept { return generators_.size(); }
  /// -1 when absent.
  int generator_index(std::string_view name) const;
  bool has_symbolic() const noexcept { return !symbolic_.empty(); }

  /// Word over this presentation's generators, e.g. "s1*s2^-1", "(a*b)^2", "[a,b]", "1".
  Word parse_word(std::string_view text) const;
  std::string format(const Word& w) const { return format_word(w, generators_); }
  /// `<a, b | a^2 = b^3, [a,b] = 1>`, or `<1>` for no generators.
  std::string to_string() const;

  /// Renames generators; names missing from the map are kept.
  Presentation renamed(const std::map<std::string, std::string>& names) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::vector<SymbolicRelator> symbolic_;
};

/// Parses `<a, b | a^2 = b^3, [a,b], (a*b)^2 = F^{e_1}>`.  A right-hand side of the form
/// gen^{symbol} gives a symbolic relator.  Throws ParseError with line/column.
Presentation parse_presentation(std::string_view text);

/// Renders one relator as an equation: [x,y] = 1, P = N^-1 when it splits into a positive
/// and a negative part, otherwise w = 1.
std::string format_relator(const Word& w, std::span<const std::string> names);

/// Same generator names (as sets) and the same relators up to cyclic permutation and inversion,
/// ignoring trivial ones.
bool same_relator_set(const Presentation& a, const Presentation& b);

/// Generators s1..s_{k-1} with commutation, braid, (s1...s_{k-1})^k and s1...s_{k-1}s_{k-1}...s1.
Presentation mod_sphere_presentation(int k);
/// Generators a_ij (1 <= i < j < k) with the five pure relation families.
Presentation pmod_sphere_presentation(int k);
/// Words for the pure generators in s1..s_{k-1}: a_ij = (s_{j-1}...s_{i+1}) s_i^2 (s_{j-1}...s_{i+1})^-1.
std::vector<Word> pmod_generator_words(int k);
/// Name of a_ij; indices of 10 or more are separated by an underscore.
std::string pure_generator_name(int i, int j);

struct Abelianization {
  /// Invariant factors greater than 1, ascending.
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  /// "Z^2 ⊕ Z_2", "0" for the trivial group.
  std::string to_string() const;
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

/// Throws DomainError for presentations with symbolic relators.
Abelianization abelianization(const Presentation& p);

struct SchreierResult {
  Presentation presentation;
  /// Each Schreier generator as a word over the input generators.
  std::vector<Word> generator_words;
  int index = 1;
  /// Schreier generators before the transversal edges are removed: index * |gens|.
  std::size_t free_cover_generators = 0;
  CosetTable table;
};

/// Presentation of psi^-1(H) for psi: generator j -> psi[j].  Schreier generators are named
/// x_<coset>_<generator> over a breadth-first transversal.  Throws DomainError if psi does not
/// respect the relators or its image does not act transitively on the cosets of H.
SchreierResult reidemeister_schreier(const Presentation& p, std::span<const Permutation> psi, const PermGroup& h);

struct TietzeOptions {
  /// Largest relator used to eliminate a generator that occurs in it once.
  std::size_t max_eliminating_length = 12;
  /// Largest increase of total relator length accepted for one elimination.
  std::size_t max_growth = 40;
  int max_rounds = 10000;
  /// Generators never eliminated (by name).
  std::vector<std::string> protected_generators;
};

struct TietzeResult {
  Presentation presentation;
  /// Input index of each surviving generator.
  std::vector<int> kept;
  /// Eliminated generators as words over the surviving ones, by input index.
  std::map<int, Word> eliminated;
  std::vector<std::string> script;
};

/// Deterministic simplification; generators in symbolic relators' powers are never removed.
TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& opts = {});

struct LiftData {
  /// One lifted generator name per quotient generator.
  std::vector<std::string> lift_names;
  /// conjugation[q][a]: the kernel word equal to lift_q * a * lift_q^-1.
  std::vector<std::vector<Word>> conjugation;
  struct Evaluation {
    Word word;
    /// When set, the lifted relator equals kernel generator `gen` to the power `symbol`.
    std::optional<std::pair<int, std::string>> symbolic;
  };
  /// Per quotient relator: the kernel element the lifted relator evaluates to.
  std::vector<Evaluation> evaluations;

  /// Every lift conjugates kernel generator a to a^{exponents[q]}; every relator evaluates to 1.
  static LiftData power_conjugation(const Presentation& n, const Presentation& q,
                                    std::vector<std::string> lift_names, std::span<const std::int64_t> exponents);
};

/// <S_N, lifts | R_N, r' = evaluation, s' a s'^-1 = s_a>.  Throws DomainError on missing entries
/// or name clashes.
Presentation extension_presentation(const Presentation& n, const Presentation& q, const LiftData& data);

}  // namespace liftable
