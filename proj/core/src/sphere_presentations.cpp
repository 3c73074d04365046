#include <array>

#include "liftable/error.hpp"
#include "liftable/presentation.hpp"

namespace liftable {

namespace {

Word gen(int i, int e = 1) { return Word::power_of(i, e); }

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

void require_points(int k, const char* what) {
  if (k < 3) throw DomainError(std::string(what) + " needs at least 3 marked points, got " + std::to_string(k));
  if (k > kMaxGroupDegree) throw CapacityError(std::string(what) + " limited to " + std::to_string(kMaxGroupDegree) + " points");
}

}  // namespace

Presentation mod_sphere_presentation(int k) {
  require_points(k, "mod_sphere_presentation");
  std::vector<std::string> names;
  for (int i = 1; i < k; ++i) names.push_back("s" + std::to_string(i));
  // s_i is generator i - 1.
  std::vector<Word> rels;
  for (int i = 1; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) rels.push_back(commutator(gen(i - 1), gen(j - 1)));
  }
  for (int i = 1; i + 1 < k; ++i) {
    const Word a = gen(i - 1), b = gen(i);
    rels.push_back(a * b * a * (b * a * b).inverse());
  }
  Word chain;
  for (int i = 1; i < k; ++i) chain = chain * gen(i - 1);
  rels.push_back(chain.pow(k));
  Word back;
  for (int i = k - 1; i >= 1; --i) back = back * gen(i - 1);
  rels.push_back(chain * back);
  return Presentation(std::move(names), std::move(rels));
}

std::string pure_generator_name(int i, int j) {
  if (i >= 10 || j >= 10) return "a" + std::to_string(i) + "_" + std::to_string(j);
  return "a" + std::to_string(i) + std::to_string(j);
}

Presentation pmod_sphere_presentation(int k) {
  require_points(k, "pmod_sphere_presentation");
  std::vector<std::string> names;
  std::vector<std::vector<int>> index(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), -1));
  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(names.size());
      names.push_back(pure_generator_name(i, j));
    }
  }
  const auto a = [&](int i, int j) { return gen(index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); };
  const int m = k - 1;
  std::vector<Word> rels;
  for (int p = 1; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q)
      for (int r = q + 1; r <= m; ++r)
        for (int s = r + 1; s <= m; ++s) rels.push_back(commutator(a(p, q), a(r, s)));
  for (int p = 1; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q)
      for (int r = q + 1; r <= m; ++r)
        for (int s = r + 1; s <= m; ++s) rels.push_back(commutator(a(p, s), a(q, r)));
  for (int p = 1; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q)
      for (int r = q + 1; r <= m; ++r)
        for (int s = r + 1; s <= m; ++s) rels.push_back(commutator(a(r, s) * a(p, r) * a(r, s).inverse(), a(q, s)));
  for (int p = 1; p <= m; ++p) {
    for (int q = p + 1; q <= m; ++q) {
      for (int r = q + 1; r <= m; ++r) {
        const Word x = a(p, r) * a(q, r) * a(p, q);
        const Word y = a(q, r) * a(p, q) * a(p, r);
        const Word z = a(p, q) * a(p, r) * a(q, r);
        rels.push_back(x * y.inverse());
        rels.push_back(y * z.inverse());
      }
    }
  }
  Word total;
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j <= m; ++j) total = total * a(i, j);
  rels.push_back(total);
  return Presentation(std::move(names), std::move(rels));
}

std::vector<Word> pmod_generator_words(int k) {
  require_points(k, "pmod_generator_words");
  std::vector<Word> out;
  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Word conj;
      for (int t = j - 1; t >= i + 1; --t) conj = conj * gen(t - 1);
      out.push_back(conj * gen(i - 1, 2) * conj.inverse());
    }
  }
  return out;
}

}  // namespace liftable
