#include "liftable/word.hpp"

#include <algorithm>

#include "liftable/error.hpp"

namespace liftable {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw DomainError("word letters must have exponent +1 or -1");
    if (l.gen < 0) throw DomainError("negative generator index in word");
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::power_of(int gen, int power) {
  const Letter l{gen, power >= 0 ? 1 : -1};
  return Word(std::vector<Letter>(static_cast<std::size_t>(power >= 0 ? power : -power), l));
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(int e) const {
  const Word base = e >= 0 ? *this : inverse();
  Word out;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) out = out * base;
  return out;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo), letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

std::vector<long long> Word::exponent_sums(std::size_t num_gens) const {
  std::vector<long long> sums(num_gens, 0);
  for (const auto& l : letters_) {
    if (static_cast<std::size_t>(l.gen) >= num_gens) throw DomainError("letter references undeclared generator");
    sums[static_cast<std::size_t>(l.gen)] += l.exp;
  }
  return sums;
}

int Word::max_generator() const noexcept {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const auto& l : b.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word canonical_relator(const Word& w) {
  const Word base = w.cyclically_reduced();
  if (base.empty()) return base;
  std::vector<Letter> best;
  for (const Word& v : {base, base.inverse()}) {
    const auto& ls = v.letters();
    for (std::size_t r = 0; r < ls.size(); ++r) {
      std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(r), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return Word(std::move(best));
}

namespace {

std::string syllables(std::span<const Letter> ls, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int e = static_cast<int>(j - i) * ls[i].exp;
    if (!s.empty()) s += '*';
    const auto gen = static_cast<std::size_t>(ls[i].gen);
    s += gen < names.size() ? names[gen] : "g" + std::to_string(gen);
    if (e != 1) s += "^" + std::to_string(e);
    i = j;
  }
  return s;
}

}  // namespace

std::string format_word(const Word& w, std::span<const std::string> names) {
  const auto& ls = w.letters();
  if (ls.empty()) return "1";
  // Smallest period u with w = u^m, m >= 2, |u| >= 2.
  for (std::size_t p = 2; p * 2 <= ls.size(); ++p) {
    if (ls.size() % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < ls.size() && periodic; ++i) periodic = ls[i] == ls[i - p];
    if (periodic) {
      const std::span<const Letter> u(ls.data(), p);
      bool single_syllable = std::all_of(u.begin(), u.end(), [&](const Letter& l) { return l == u[0]; });
      if (!single_syllable) return "(" + syllables(u, names) + ")^" + std::to_string(ls.size() / p);
    }
  }
  return syllables(ls, names);
}

Permutation psi_image(const Word& w, int k) {
  Permutation p = Permutation::identity(k);
  for (const auto& l : w.letters()) {
    if (l.gen + 2 > k) throw DomainError("half-twist sigma_" + std::to_string(l.gen + 1) + " needs degree > " + std::to_string(k));
    p = p * Permutation::transposition(k, l.gen + 1, l.gen + 2);
  }
  return p;
}

Word half_twist_word(const Permutation& p) {
  Word out;
  for (const auto& cyc : p.cycles()) {
    const int a1 = cyc[0];
    for (std::size_t i = cyc.size() - 1; i >= 1; --i) {
      const int a = std::min(a1, cyc[i]);
      const int b = std::max(a1, cyc[i]);
      std::vector<Letter> t;
      for (int j = a; j <= b - 2; ++j) t.push_back({j - 1, 1});
      t.push_back({b - 2, 1});
      for (int j = b - 2; j >= a; --j) t.push_back({j - 1, -1});
      out = out * Word(std::move(t));
    }
  }
  return out;
}

}  // namespace liftable
