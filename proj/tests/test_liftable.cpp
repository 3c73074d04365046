#include <numeric>

#include "doctest.h"
#include "liftable/analysis.hpp"
#include "liftable/error.hpp"
#include "liftable/residue.hpp"
#include "oracles.hpp"

using namespace liftable;

namespace {

// |H1| and |H2| straight from the definition, by scanning units and all permutations.
std::pair<std::uint64_t, std::uint64_t> stab_orders(const DataSet& d) {
  const auto n = d.degree();
  std::vector<std::int64_t> c;
  for (const auto& p : d.pairs()) c.push_back((n / p.order) * p.d % n);
  const int k = static_cast<int>(c.size());
  std::set<oracle::Perm> h1, h2;
  for (std::int64_t l = 1; l < n; ++l) {
    if (std::gcd(l, n) != 1) continue;
    oracle::Perm s = oracle::identity(k);
    do {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = l * c[static_cast<std::size_t>(j)] % n == c[static_cast<std::size_t>(s[static_cast<std::size_t>(j)] - 1)];
      if (!ok) continue;
      h1.insert(s);
      if (l == 1) h2.insert(s);
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return {h1.size(), h2.size()};
}

Permutation eval(const Word& w, int k) {
  Permutation acc = Permutation::identity(k);
  for (const auto& l : w.letters()) acc = acc * Permutation::transposition(k, l.gen + 1, l.gen + 2);
  return acc;
}

using M = Matrix4;

M mul(const M& a, const M& b) {
  M c{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t t = 0; t < 4; ++t) c[i][j] += a[i][t] * b[t][j];
  return c;
}

M pw(const M& a, int e) {
  M r{};
  for (std::size_t i = 0; i < 4; ++i) r[i][i] = 1;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::string expected_normalizer(std::int64_t g) {
  const auto n = std::to_string(2 * g + 2), a = std::to_string(g + 2), b = std::to_string(g + 1);
  return "<F, G1, G2, G3 | F^" + n + ", [G1,F], [G2,F], [G1,G3], (G1*G2)^2 = F^" + a +
         ", G3*F*G3^-1 = F^-1, G1^2 = G3^2, (G3*G2)^2 = F^" + b + ">";
}

std::string expected_centralizer(std::int64_t g) {
  return "<F, G1, G2 | F^" + std::to_string(2 * g + 2) + ", [G1,F], [G2,F], (G1*G2)^2 = F^" + std::to_string(g + 2) + ">";
}

}  // namespace

TEST_CASE("analyze: hyperelliptic genus 2") {
  const auto r = analyze(make_hyperelliptic(2));
  CHECK(r.genus == 2);
  CHECK(r.mod_equals_lmod);
  CHECK(r.stab.index_mod_lmod == 1);
  REQUIRE(r.lmod);
  CHECK(r.lmod->index == 1);
  CHECK(r.lmod->presentation == mod_sphere_presentation(6));
  CHECK(std::find(r.families.begin(), r.families.end(), "hyperelliptic") != r.families.end());
  CHECK_FALSE(r.classification);
}

TEST_CASE("analyze: hyperelliptic genus 2 to 5") {
  for (int g = 2; g <= 5; ++g) {
    const auto r = analyze(make_hyperelliptic(g));
    CHECK(r.stab.h1.order() == factorial(2 * g + 2));
    CHECK(r.stab.h1.is_symmetric());
    CHECK(r.mod_equals_lmod);
    REQUIRE(r.lmod);
    CHECK(r.lmod->presentation == mod_sphere_presentation(2 * g + 2));
  }
}

TEST_CASE("analyze: doubled family example with n1 = 2") {
  const auto r = analyze(parse_dataset("(6,0;(1,2),(1,2),(1,3),(2,3))"));
  CHECK(r.genus == 2);
  CHECK(r.stab.index_mod_lmod == 6);
  CHECK(r.stab.index_n_c == 2);
  REQUIRE(r.lmod);
  REQUIRE(r.clmod);
  CHECK(abelianization(r.lmod->presentation).to_string() == "Z ⊕ Z_2 ⊕ Z_2");
  CHECK(abelianization(r.clmod->presentation).to_string() == "Z ⊕ Z_2");
  CHECK(abelianization(r.clmod->presentation) == abelianization(doubled_clmod_presentation()));
  CHECK(abelianization(r.lmod->presentation) == abelianization(doubled_lmod_presentation()));
  CHECK(std::find(r.families.begin(), r.families.end(), "doubled") != r.families.end());
}

TEST_CASE("analyze: irreducible example") {
  const auto r = analyze(parse_dataset("(7,0;(1,7),(2,7),(4,7))"));
  REQUIRE(r.classification);
  CHECK(r.classification->label == IrreducibleCase::i);
  CHECK(r.stab.h1.order() == 3);
  REQUIRE(r.lmod);
  CHECK(abelianization(r.lmod->presentation).to_string() == "Z_3");
}

TEST_CASE("analyze refuses out-of-scope input") {
  CHECK_THROWS_AS(analyze(parse_dataset("(2,0;(1,2)_4)")), DomainError);
  CHECK_THROWS_AS(analyze(parse_dataset("(4,0;(1,2),(1,4))")), DomainError);
  CHECK_THROWS_AS(analyze(parse_dataset("(2,1;(1,2),(1,2))")), DomainError);
}

TEST_CASE("analysis bookkeeping is consistent for every class with g <= 3") {
  for (int g = 2; g <= 3; ++g) {
    for (const auto& d : enumerate_spherical(g)) {
      const auto r = analyze(d);
      const int k = static_cast<int>(d.num_points());
      const auto [h1, h2] = stab_orders(d);
      CHECK(r.stab.h1.order() == h1);
      CHECK(r.stab.h2.order() == h2);
      CHECK(h1 / h2 == r.stab.units_sub.size());
      CHECK(r.stab.index_mod_lmod * h1 == factorial(k));
      for (const auto* sub : {&r.lmod, &r.clmod}) {
        if (!*sub) continue;
        const auto& s = **sub;
        const auto idx = static_cast<std::size_t>(s.index);
        CHECK(s.degree == k);
        if (s.index > 1) {
          CHECK(s.free_cover_generators == idx * static_cast<std::size_t>(k - 1));
          CHECK(s.schreier_generators == idx * static_cast<std::size_t>(k - 1) - (idx - 1));
        }
        // The generators map onto the subgroup.
        const auto& h = sub == &r.lmod ? r.stab.h1 : r.stab.h2;
        std::vector<Permutation> images;
        for (const auto& w : s.generator_words) {
          images.push_back(eval(w, k));
          CHECK(h.contains(images.back()));
        }
        CHECK(perm_closure(images, k).order() == h.order());
      }
      REQUIRE(r.lmod);
      CHECK(static_cast<std::uint64_t>(r.lmod->index) == r.stab.index_mod_lmod);
      REQUIRE(r.clmod);
      CHECK(static_cast<std::uint64_t>(r.clmod->index) * h2 == factorial(k));
    }
  }
}

TEST_CASE("superelliptic families") {
  for (auto [n, k] : std::vector<std::pair<std::int64_t, int>>{{3, 1}, {3, 2}, {5, 1}}) {
    const auto d = make_balanced_superelliptic(n, k);
    const int pts = 2 * k + 2;
    const auto r = analyze(d);
    CHECK(r.stab.units_sub == std::vector<std::int64_t>{1, n - 1});
    std::vector<oracle::Perm> gens;
    for (int i = 1; i + 2 <= pts; ++i) {
      oracle::Perm t = oracle::identity(pts);
      std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i + 1)]);
      gens.push_back(t);
    }
    oracle::Perm flip = oracle::identity(pts);
    for (int i = 0; i < pts; i += 2) std::swap(flip[static_cast<std::size_t>(i)], flip[static_cast<std::size_t>(i + 1)]);
    gens.push_back(flip);
    const auto expected = oracle::closure(gens, pts);
    CHECK(r.stab.h1.order() == expected.size());
    for (const auto& p : expected) CHECK(r.stab.h1.contains(Permutation(p)));
    CHECK(eval(r.stab.c.at(n - 1), pts) == Permutation(flip));
    CHECK(std::find(r.families.begin(), r.families.end(), "superelliptic") != r.families.end());
  }
}

TEST_CASE("doubled family: indices against brute force") {
  for (int g : {2, 4, 6, 8}) {
    for (const auto& d : enumerate_doubled(g)) {
      const auto r = analyze(d, AnalyzeOptions{0, {}, {}});
      const auto [h1, h2] = stab_orders(d);
      CHECK(r.stab.index_mod_lmod == 24 / h1);
      CHECK(r.stab.index_n_c == h1 / h2);
      // n1 = 2 always yields the Klein four-group.
      if (d.pairs()[0].order == 2) {
        CHECK(r.stab.index_mod_lmod == 6);
        CHECK(r.stab.index_n_c == 2);
      }
    }
  }
}

TEST_CASE("doubled family: a unit flipping a single pair") {
  // 5 = -1 mod 3 and 1 mod 4: it swaps the first pair only, so H1 is a Klein group.
  const auto d = parse_dataset("(12,0;(1,3),(2,3),(1,4),(3,4))");
  CHECK(validate(d).genus == 6);
  CHECK(make_doubled(parse_dataset("(12,0;(2,3),(1,4),(1,12))")) == d);
  const auto r = analyze(d);
  CHECK(stab_orders(d) == std::pair<std::uint64_t, std::uint64_t>{4, 1});
  CHECK(r.stab.index_mod_lmod == 6);
  CHECK(r.stab.index_n_c == 4);
  CHECK(r.stab.units_sub == std::vector<std::int64_t>{1, 5, 7, 11});
}

TEST_CASE("doubled family with n1 != 2: pure CLMod and the swap LMod") {
  const auto r = analyze(parse_dataset("(6,0;(1,3),(2,3),(1,6),(5,6))"));
  CHECK(r.stab.index_mod_lmod == 12);
  CHECK(r.stab.index_n_c == 2);
  REQUIRE(r.lmod);
  REQUIRE(r.clmod);
  CHECK(abelianization(r.lmod->presentation).to_string() == "Z^2 ⊕ Z_2");
  CHECK(abelianization(r.lmod->presentation) == abelianization(doubled_pure_lmod_presentation()));
  CHECK(abelianization(r.clmod->presentation).to_string() == "Z^2");
  CHECK(r.clmod->presentation.relators().empty());
  const auto nc = normalizer_centralizer(r);
  CHECK(nc.centralizer.provenance == Provenance::derived);
  CHECK(same_relator_set(nc.centralizer.presentation, parse_presentation("<F, G1, G2 | F^6, [G1,F], [G2,F]>")));
}

TEST_CASE("built-in normalizer for the top-order doubled action") {
  for (std::int64_t g : {2, 4, 6}) {
    const auto nc = doubled_top_order_normalizer(g);
    CHECK(nc.normalizer.provenance == Provenance::built_in);
    CHECK(same_relator_set(nc.normalizer.presentation, parse_presentation(expected_normalizer(g))));
    CHECK(same_relator_set(nc.centralizer.presentation, parse_presentation(expected_centralizer(g))));
    CHECK(nc.normalizer.conjugation_exponents == std::vector<std::int64_t>{1, 2 * g + 1, 1});
  }
  const auto report = analyze(parse_dataset("(6,0;(1,2),(1,2),(1,3),(2,3))"));
  const auto nc = normalizer_centralizer(report);
  CHECK(nc.normalizer.provenance == Provenance::built_in);
  CHECK(same_relator_set(nc.normalizer.presentation, parse_presentation(expected_normalizer(2))));
  CHECK(abelianization(nc.centralizer.presentation).to_string() == "Z ⊕ Z_2 ⊕ Z_6");
  CHECK_THROWS_AS(doubled_top_order_normalizer(3), DomainError);
}

TEST_CASE("normalizers of irreducible actions") {
  auto nc = normalizer_centralizer(analyze(parse_dataset("(7,0;(5,7),(1,7),(1,7))")));
  CHECK(same_relator_set(nc.normalizer.presentation, parse_presentation("<F, G | F^7, G^2, [G,F]>")));
  CHECK(nc.normalizer.presentation == nc.centralizer.presentation);
  CHECK(nc.normalizer.descriptor == GroupDescriptor::direct_product(7, 2));

  nc = normalizer_centralizer(analyze(parse_dataset("(7,0;(1,7),(2,7),(4,7))")));
  CHECK(same_relator_set(nc.normalizer.presentation, parse_presentation("<F, G | F^7, G^3, G*F*G^-1 = F^2>")));
  CHECK(same_relator_set(nc.centralizer.presentation, parse_presentation("<F | F^7>")));
  CHECK(abelianization(nc.normalizer.presentation).to_string() == "Z_3");

  nc = normalizer_centralizer(analyze(parse_dataset("(9,0;(1,3),(1,9),(5,9))")));
  CHECK(same_relator_set(nc.normalizer.presentation, parse_presentation("<F | F^9>")));
}

TEST_CASE("symbolic normalizers carry one parameter per relator") {
  const auto r = analyze(parse_dataset("(8,0;(1,4),(3,4),(1,8),(7,8))"));
  const auto nc = normalizer_centralizer(r);
  CHECK(nc.normalizer.provenance == Provenance::symbolic);
  REQUIRE(r.lmod);
  CHECK(nc.normalizer.presentation.symbolic_relators().size() == r.lmod->presentation.relators().size());
  // Every lift conjugates F by a unit of the stabilizer.
  for (auto e : nc.normalizer.conjugation_exponents) {
    CHECK(std::find(r.stab.units_sub.begin(), r.stab.units_sub.end(), mod(e, 8)) != r.stab.units_sub.end());
  }
}

TEST_CASE("user-supplied lift data") {
  const auto r = analyze(parse_dataset("(6,0;(1,2),(1,2),(1,3),(2,3))"));
  const auto n6 = parse_presentation("<F | F^6>");
  const auto q = r.lmod->presentation;
  std::vector<std::int64_t> exps(q.num_generators(), 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < q.num_generators(); ++i) names.push_back("L" + std::to_string(i + 1));
  const auto data = LiftData::power_conjugation(n6, q, names, exps);
  const auto nc = normalizer_centralizer(r, data);
  CHECK(nc.normalizer.provenance == Provenance::user_supplied);
  CHECK(nc.normalizer.presentation == extension_presentation(n6, q, data));
}

TEST_CASE("symplectic images of the normalizer generators") {
  const auto& m = doubled_matrices();
  // Recomputed here with an independent product.
  CHECK(pw(m.f, 6) == pw(m.f, 0));
  CHECK(mul(m.g1, m.f) == mul(m.f, m.g1));
  CHECK(mul(m.g2, m.f) == mul(m.f, m.g2));
  CHECK(mul(m.g3, m.f) == mul(pw(m.f, 5), m.g3));
  CHECK(m.g3 == mul(m.g1, m.g));
  CHECK(mul(m.g1, m.g1) == mul(m.g3, m.g3));
  CHECK(mul(m.g1, m.g3) == mul(m.g3, m.g1));
  CHECK(pw(mul(m.g1, m.g2), 2) == pw(m.f, 4));
  CHECK(pw(mul(m.g3, m.g2), 2) == pw(m.f, 3));
  const M j{{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}};
  for (const auto* x : {&m.f, &m.g1, &m.g2, &m.g, &m.g3}) {
    M t{};
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) t[a][b] = (*x)[b][a];
    CHECK(mul(mul(t, j), *x) == j);
  }
  // Transcribed entries.
  CHECK(m.f == M{{{0, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, -1, 0}}});
  CHECK(m.g1 == M{{{0, -2, -2, -1}, {2, 2, 1, 2}, {-2, -1, 0, -2}, {1, 2, 2, 2}}});
  CHECK(m.g == M{{{0, 0, -1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}});

  const auto v = verify_doubled_matrices();
  CHECK(v.all_relations_hold);
  CHECK(v.checks.size() == 14);
  std::map<std::string, ExponentReading> by_name;
  for (const auto& e : v.exponents) by_name[e.name] = e;
  CHECK(by_name.at("i6").computed == 4);
  CHECK(by_name.at("i7").computed == 3);
  CHECK(by_name.at("i3").agrees);
  // Both exponents come out as 0 from the matrices.
  CHECK(by_name.at("i4").computed == 0);
  CHECK(by_name.at("i5").computed == 0);
  CHECK_FALSE(by_name.at("i4").agrees);
}

TEST_CASE("normalizer table at genus 3") {
  const auto rows = table_genus3();
  REQUIRE(rows.size() == 8);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"Z_7 ⋊_2 Z_3", "Z_7"}, {"Z_7 × Z_2", "Z_7 × Z_2"}, {"Z_8 ⋊_5 Z_2", "Z_8"}, {"Z_8 × Z_2", "Z_8 × Z_2"},
      {"Z_9", "Z_9"},         {"Z_12 ⋊_5 Z_2", "Z_12"},   {"Z_12", "Z_12"},       {"Z_14", "Z_14"}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].row == static_cast<int>(i) + 1);
    CHECK(validate(rows[i].dataset).genus == 3);
    CHECK(rows[i].classification.normalizer.to_string() == expected[i].first);
    CHECK(rows[i].classification.centralizer.to_string() == expected[i].second);
  }
  CHECK(format_dataset(rows[5].dataset) == "(12,0;(1,2),(1,12),(5,12))");
  CHECK(format_dataset(rows[7].dataset) == "(14,0;(1,2),(3,7),(1,14))");
  const auto text = format_table(rows);
  CHECK(text.find("(not computed)") != std::string::npos);
  CHECK(text.find("Z_12 ⋊_5 Z_2") != std::string::npos);
}

TEST_CASE("subgroup_presentation at index 1 and capacity") {
  std::vector<Permutation> adj;
  for (int i = 1; i < 5; ++i) adj.push_back(Permutation::transposition(5, i, i + 1));
  const auto s = subgroup_presentation(5, perm_closure(adj, 5));
  CHECK(s.index == 1);
  CHECK(s.presentation == mod_sphere_presentation(5));
}
