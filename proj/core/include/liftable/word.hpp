#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "liftable/permutation.hpp"

namespace liftable {

/// A generator (0-based index) raised to +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;

  Letter inverse() const noexcept { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word over 0-based generator indices.
class Word {
 public:
  Word() = default;
  /// Freely reduces the letters; throws DomainError for exponents other than +-1.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  /// gen^power as |power| letters.
  static Word power_of(int gen, int power);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(int e) const;
  /// Removes inverse pairs at the two ends.
  Word cyclically_reduced() const;
  /// Exponent sum of each generator, sized to num_gens.
  std::vector<long long> exponent_sums(std::size_t num_gens) const;
  int max_generator() const noexcept;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Representative of the relator class of w under cyclic permutation and
/// inversion: the least rotation of the cyclic reduction of w or of w^-1.
Word canonical_relator(const Word& w);

/// Syllables joined by '*', powers as x^e, periodic words as (u)^m, the empty word as "1".
std::string format_word(const Word& w, std::span<const std::string> names);

/// Half-twist words: generator i (0-based) stands for sigma_{i+1} and maps to the
/// transposition (i+1, i+2).  psi(w1 w2) = psi(w1) * psi(w2).
Permutation psi_image(const Word& w, int k);

/// A word in sigma_1..sigma_{k-1} whose psi-image is p: cycles (a1,...,as) are
/// written (a1,as)(a1,a_{s-1})...(a1,a2) and each transposition (a,b), a < b, as
/// sigma_a ... sigma_{b-2} sigma_{b-1} sigma_{b-2}^-1 ... sigma_a^-1.
Word half_twist_word(const Permutation& p);

}  // namespace liftable
