#include <numeric>
#include <random>

#include "doctest.h"
#include "liftable/error.hpp"
#include "liftable/gamma.hpp"
#include "oracles.hpp"

using namespace liftable;

namespace {

GammaVector gv(const char* s) { return gamma_vector(parse_dataset(s)); }

std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> u;
  for (std::int64_t l = 1; l < n; ++l)
    if (std::gcd(l, n) == 1) u.push_back(l);
  return u;
}

// Brute-force stabilizer directly on value arrays: (l, sigma) with l * c[sigma^-1(i)] = c[i].
struct BruteStab {
  std::vector<std::pair<std::int64_t, oracle::Perm>> entries;
  std::set<std::int64_t> unit_projection;
  std::uint64_t h1_size = 0;
  std::uint64_t h2_size = 0;
};

BruteStab brute_stab(const GammaVector& g, bool keep_entries) {
  BruteStab out;
  const int k = g.size();
  const auto n = g.modulus();
  const auto& c = g.entries();
  std::set<oracle::Perm> h1;
  for (auto l : units(n)) {
    oracle::Perm sigma = oracle::identity(k);
    do {
      // sigma^-1(i) = j means sigma(j) = i: check l * c[j] = c[sigma(j)] for all j.
      bool fixes = true;
      for (int j = 0; j < k && fixes; ++j) fixes = (l * c[static_cast<std::size_t>(j)]) % n == c[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)] - 1)];
      if (!fixes) continue;
      out.unit_projection.insert(l);
      if (l == 1) ++out.h2_size;
      if (keep_entries) out.entries.emplace_back(l, sigma);
      if (k <= 8) h1.insert(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  out.h1_size = k <= 8 ? h1.size() : out.h2_size * out.unit_projection.size();
  return out;
}

oracle::Perm psi(const Word& w, int k) {
  oracle::Perm acc = oracle::identity(k);
  for (const auto& letter : w.letters()) {
    oracle::Perm t = oracle::identity(k);
    std::swap(t[static_cast<std::size_t>(letter.gen)], t[static_cast<std::size_t>(letter.gen + 1)]);
    acc = oracle::compose(acc, t);
  }
  return acc;
}

oracle::Perm to_oracle(const Permutation& p) {
  oracle::Perm r;
  for (int i = 1; i <= p.degree(); ++i) r.push_back(p.image(i));
  return r;
}

std::vector<GammaVector> all_vectors(int max_g) {
  std::vector<GammaVector> out;
  for (int g = 2; g <= max_g; ++g)
    for (const auto& d : enumerate_spherical(g)) out.push_back(gamma_vector(d));
  return out;
}

}  // namespace

TEST_CASE("gamma_vector examples") {
  CHECK(gv("(7,0;(1,7),(2,7),(4,7))").entries() == std::vector<std::int64_t>{1, 2, 4});
  CHECK(gv("(7,0;(1,7),(2,7),(4,7))").to_string() == "(1,2,4) mod 7");
  CHECK(gv("(2,0;(1,2)_6)").entries() == std::vector<std::int64_t>(6, 1));
  CHECK(gv("(6,0;(1,2),(1,2),(1,3),(2,3))").entries() == std::vector<std::int64_t>{3, 3, 2, 4});
  CHECK(gv("(6,0;(1,2),(1,2),(1,3),(2,3))").cover_genus() == 2);
  CHECK(gv("(8,0;(1,4),(1,8),(5,8))").branch_order(1) == 4);
  CHECK_THROWS_AS(gamma_vector(parse_dataset("(2,1;(1,2),(1,2))")), DomainError);
  CHECK_THROWS_AS(GammaVector(7, {1, 2, 3}), DomainError);
  CHECK_THROWS_AS(GammaVector(7, {0, 1, 6}), DomainError);
}

TEST_CASE("act examples") {
  const auto g = gv("(7,0;(1,7),(2,7),(4,7))");
  CHECK(act(1, Permutation::identity(3), g) == g);
  CHECK(act(2, Permutation::parse("(1,2,3)", 3), g) == g);
  CHECK(act(1, Permutation::parse("(1,2)", 3), g).entries() == std::vector<std::int64_t>{2, 1, 4});
  const GammaVector h(7, {5, 1, 1});
  CHECK(act(1, Permutation::parse("(2,3)", 3), h) == h);
  CHECK_THROWS_AS(act(2, Permutation::identity(6), GammaVector(6, {1, 1, 4})), DomainError);
  CHECK_THROWS_AS(act(1, Permutation::identity(4), g), DomainError);
}

TEST_CASE("act is a left action on every vector with g <= 3") {
  std::mt19937 rng(3);
  for (const auto& g : all_vectors(3)) {
    const int k = g.size();
    CHECK(act(1, Permutation::identity(k), g) == g);
    const auto us = units(g.modulus());
    for (int trial = 0; trial < 10; ++trial) {
      const auto l1 = us[rng() % us.size()], l2 = us[rng() % us.size()];
      oracle::Perm a = oracle::identity(k), b = oracle::identity(k);
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      const Permutation s1(a), s2(b);
      CHECK(act(l1, s1, act(l2, s2, g)) == act((l1 * l2) % g.modulus(), s1 * s2, g));
      // Position i of the result is l c_{sigma^-1(i)}.
      const auto moved = act(l1, s1, g);
      for (int i = 1; i <= k; ++i) CHECK(moved[i] == (l1 * g[s1.inverse().image(i)]) % g.modulus());
    }
  }
}

TEST_CASE("stabilizer_bruteforce examples") {
  const auto s = stabilizer_bruteforce(gv("(7,0;(1,7),(2,7),(4,7))"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == StabEntry{1, Permutation::identity(3)});
  CHECK(s[1] == StabEntry{2, Permutation::parse("(1,2,3)", 3)});
  CHECK(s[2] == StabEntry{4, Permutation::parse("(1,3,2)", 3)});

  const auto h = stabilizer_bruteforce(gv("(2,0;(1,2)_6)"));
  CHECK(h.size() == 720);
  CHECK(std::all_of(h.begin(), h.end(), [](const StabEntry& e) { return e.unit == 1; }));

  const auto t = stabilizer_bruteforce(GammaVector(7, {5, 1, 1}));
  REQUIRE(t.size() == 2);
  CHECK(t[1] == StabEntry{1, Permutation::parse("(2,3)", 3)});

  CHECK_THROWS_AS(stabilizer_bruteforce(GammaVector(2, std::vector<std::int64_t>(12, 1))), CapacityError);
}

TEST_CASE("stabilizer_bruteforce is a subgroup and matches the array brute force, g <= 3") {
  for (const auto& g : all_vectors(3)) {
    if (g.size() > 8) continue;
    const auto s = stabilizer_bruteforce(g);
    const auto expected = brute_stab(g, true);
    std::set<std::pair<std::int64_t, oracle::Perm>> a, b(expected.entries.begin(), expected.entries.end());
    for (const auto& e : s) a.emplace(e.unit, to_oracle(e.sigma));
    REQUIRE(a == b);
    // All pairs for small stabilizers, sampled pairs otherwise.
    std::vector<std::pair<std::int64_t, oracle::Perm>> list(a.begin(), a.end());
    std::mt19937 rng(11);
    const bool exhaustive = list.size() <= 500;
    for (std::size_t x = 0; x < list.size(); ++x) {
      const auto& [l1, p1] = list[x];
      for (std::size_t y = 0; y < (exhaustive ? list.size() : 4); ++y) {
        const auto& [l2, p2] = list[exhaustive ? y : rng() % list.size()];
        REQUIRE(a.count({(l1 * l2) % g.modulus(), oracle::compose(p1, p2)}) == 1);
      }
      const auto inv = std::find_if(a.begin(), a.end(), [&](const auto& e) { return (e.first * l1) % g.modulus() == 1 % g.modulus(); });
      REQUIRE(inv != a.end());
      REQUIRE(a.count({inv->first, oracle::invert(p1)}) == 1);
    }
  }
}

TEST_CASE("liftable_images examples") {
  const auto hyp = liftable_images(gv("(2,0;(1,2)_6)"));
  CHECK(hyp.b.size() == 15);
  CHECK(hyp.c.size() == 1);
  CHECK(hyp.c.at(1).empty());
  CHECK(hyp.h1.order() == 720);
  CHECK(hyp.h2.order() == 720);
  CHECK(hyp.index_mod_lmod == 1);

  const auto sup = liftable_images(GammaVector(3, {1, 2, 1, 2}));
  CHECK(sup.b == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(sup.units_sub == std::vector<std::int64_t>{1, 2});
  CHECK(psi_image(sup.c.at(2), 4) == Permutation::parse("(1,2)(3,4)", 4));
  CHECK(sup.h1.order() == 8);
  CHECK(sup.h2.order() == 4);
  CHECK(sup.index_mod_lmod == 3);
  CHECK(sup.index_n_c == 2);

  const auto tri = liftable_images(gv("(7,0;(1,7),(2,7),(4,7))"));
  CHECK(tri.b.empty());
  CHECK(tri.c.size() == 3);
  CHECK(tri.c.at(1).empty());
  CHECK(psi_image(tri.c.at(2), 3) == Permutation::parse("(1,2,3)", 3));
  CHECK(psi_image(tri.c.at(4), 3) == Permutation::parse("(1,3,2)", 3));
  CHECK(tri.h1.order() == 3);
  CHECK(tri.h2.order() == 1);
}

TEST_CASE("liftable images equal the brute-force projections for every class with g <= 4") {
  LiftableOptions no_cross_check;
  no_cross_check.cross_check_degree = 0;
  for (const auto& g : all_vectors(4)) {
    const int k = g.size();
    const auto r = liftable_images(g, no_cross_check);
    const auto expected = brute_stab(g, k <= 8);
    CHECK(r.units_sub == std::vector<std::int64_t>(expected.unit_projection.begin(), expected.unit_projection.end()));
    CHECK(r.h2.order() == expected.h2_size);
    CHECK(r.h1.order() == expected.h1_size);
    CHECK(r.h1.order() == r.h2.order() * r.units_sub.size());
    CHECK(r.index_mod_lmod * r.h1.order() == factorial(k));
    CHECK(r.index_n_c == r.units_sub.size());
    if (k <= 8) {
      std::set<oracle::Perm> h1, h2;
      for (const auto& [l, p] : expected.entries) {
        h1.insert(p);
        if (l == 1) h2.insert(p);
      }
      std::set<oracle::Perm> got1, got2;
      for (const auto& p : r.h1.elements()) got1.insert(to_oracle(p));
      for (const auto& p : r.h2.elements()) got2.insert(to_oracle(p));
      CHECK(got1 == h1);
      CHECK(got2 == h2);
    }
    // B is exactly the equal-entry pairs.
    std::vector<std::pair<int, int>> b;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (g[i] == g[j]) b.emplace_back(i, j);
    CHECK(r.b == b);
    // Each C word pushes forward to a permutation fixing the vector under its unit.
    CHECK(r.c.size() == r.units_sub.size());
    for (const auto& [l, w] : r.c) {
      const Permutation s(psi(w, k));
      CHECK(act(l, s, g) == g);
      CHECK(s == r.delta.at(l));
      CHECK(r.h1.contains(s));
    }
    CHECK(r.h2.is_subgroup_of(r.h1));
  }
}

TEST_CASE("H2 is normal in H1") {
  for (const auto& g : all_vectors(3)) {
    if (g.size() > 7) continue;
    const auto r = liftable_images(g);
    for (const auto& x : r.h1.elements())
      for (const auto& b : r.h2.generators()) REQUIRE(r.h2.contains(x * b * x.inverse()));
  }
}

TEST_CASE("mod_equals_lmod") {
  CHECK(mod_equals_lmod(gv("(2,0;(1,2)_6)")));
  CHECK_FALSE(mod_equals_lmod(gv("(7,0;(1,7),(2,7),(4,7))")));
  const GammaVector three(3, std::vector<std::int64_t>(6, 1));
  CHECK(three.cover_genus() == 4);
  CHECK(mod_equals_lmod(three));
  CHECK(liftable_images(three).h1.is_symmetric());
  for (const auto& g : all_vectors(4)) {
    const auto r = liftable_images(g, LiftableOptions{0});
    CHECK(mod_equals_lmod(g) == (r.h1.order() == factorial(g.size())));
  }
}

TEST_CASE("group descriptors") {
  CHECK(GroupDescriptor::trivial_group().to_string() == "1");
  CHECK(GroupDescriptor::cyclic(9).to_string() == "Z_9");
  CHECK(GroupDescriptor::direct_product(7, 2).to_string() == "Z_7 × Z_2");
  CHECK(GroupDescriptor::semidirect(7, 3, 2).to_string() == "Z_7 ⋊_2 Z_3");
  CHECK(GroupDescriptor::semidirect(7, 3, 2).order() == 21);
  CHECK_THROWS_AS(GroupDescriptor::semidirect(7, 3, 3), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::semidirect(7, 3, 1), DomainError);
}

TEST_CASE("classify_irreducible examples") {
  auto c = classify_irreducible(gv("(7,0;(1,7),(2,7),(4,7))"));
  CHECK(c.label == IrreducibleCase::i);
  CHECK(c.normalizer.to_string() == "Z_7 ⋊_2 Z_3");
  CHECK(c.centralizer.to_string() == "Z_7");
  CHECK(c.lmod == GroupDescriptor::cyclic(3));

  c = classify_irreducible(gv("(7,0;(5,7),(1,7),(1,7))"));
  CHECK(c.label == IrreducibleCase::ii_a);
  CHECK(c.normalizer.to_string() == "Z_7 × Z_2");
  CHECK(c.centralizer.to_string() == "Z_7 × Z_2");
  CHECK(c.structure_asserted);
  CHECK(c.order_bound_holds);

  c = classify_irreducible(gv("(8,0;(1,4),(1,8),(5,8))"));
  CHECK(c.label == IrreducibleCase::ii_b);
  CHECK(c.unit == 5);
  CHECK(c.normalizer.to_string() == "Z_8 ⋊_5 Z_2");
  CHECK(c.centralizer.to_string() == "Z_8");

  c = classify_irreducible(gv("(9,0;(1,3),(1,9),(5,9))"));
  CHECK(c.label == IrreducibleCase::iii);
  CHECK(c.normalizer.to_string() == "Z_9");
  CHECK(c.centralizer.to_string() == "Z_9");
  CHECK(c.lmod == GroupDescriptor::trivial_group());

  CHECK_THROWS_AS(classify_irreducible(gv("(2,0;(1,2)_6)")), DomainError);
}

TEST_CASE("classify_irreducible agrees with the stabilizer for every 3-point class, g <= 4") {
  int seen = 0;
  for (const auto& g : all_vectors(4)) {
    if (g.size() != 3) continue;
    ++seen;
    const auto c = classify_irreducible(g);
    const auto s = brute_stab(g, true);
    const auto n = static_cast<std::uint64_t>(g.modulus());
    CHECK(c.lmod.order() == s.h1_size);
    CHECK(c.normalizer.order() == n * s.h1_size);
    CHECK(c.centralizer.order() == n * s.h2_size);
    IrreducibleCase expected = IrreducibleCase::iii;
    if (s.h1_size == 3) expected = IrreducibleCase::i;
    if (s.h1_size == 2) expected = s.h2_size == 2 ? IrreducibleCase::ii_a : IrreducibleCase::ii_b;
    CHECK(c.label == expected);
    if (expected == IrreducibleCase::ii_a) CHECK(n <= 2 * static_cast<std::uint64_t>(g.cover_genus()) + 2);
    if (expected == IrreducibleCase::i || expected == IrreducibleCase::ii_b) {
      // The twist is the unit paired with a nontrivial permutation.
      bool found = false;
      for (const auto& [l, p] : s.entries) found = found || (l == c.normalizer.twist && p != oracle::identity(3));
      CHECK(found);
    }
  }
  CHECK(seen > 10);
}
