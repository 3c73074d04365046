#include "liftable/dataset.hpp"
#include "liftable/error.hpp"
#include "liftable/residue.hpp"

namespace liftable {

namespace {

DataSet checked(DataSet d, std::string_view family) {
  const auto r = validate(d);
  if (!r.valid()) throw DomainError(std::string(family) + " parameters give an invalid data set " + format_dataset(d));
  return d;
}

}  // namespace

DataSet make_hyperelliptic(int g) {
  if (g < 2) throw DomainError("hyperelliptic family needs g >= 2");
  return checked(DataSet(2, 0, std::vector<BranchPair>(static_cast<std::size_t>(2 * g + 2), BranchPair{1, 2})),
                 "hyperelliptic");
}

DataSet make_balanced_superelliptic(std::int64_t n, int k) {
  if (n < 2 || k < 1) throw DomainError("balanced superelliptic family needs n >= 2 and k >= 1");
  std::vector<BranchPair> pairs;
  for (int i = 0; i <= k; ++i) {
    pairs.push_back({1, n});
    pairs.push_back({-1, n});
  }
  return checked(DataSet(n, 0, std::move(pairs)), "balanced superelliptic");
}

DataSet make_doubled(const DataSet& irreducible) {
  if (!validate(irreducible).valid()) throw DomainError("doubling needs a valid data set");
  const auto& p = irreducible.pairs();
  const std::int64_t n = irreducible.degree();
  if (irreducible.orbifold_genus() != 0 || p.size() != 3 || p[2].order != n || p[2].d != 1) {
    throw DomainError("doubling needs an irreducible data set ending in (1,n), got " + format_dataset(irreducible));
  }
  std::vector<BranchPair> doubled{p[0], {-p[0].d, p[0].order}, p[1], {-p[1].d, p[1].order}};
  return canonical_form(checked(DataSet(n, 0, std::move(doubled)), "doubled"));
}

std::vector<DataSet> enumerate_doubled(int g) {
  std::vector<DataSet> out;
  for (const auto& d : enumerate_spherical(g)) {
    const auto& p = d.pairs();
    if (p.size() != 4 || d.degree() <= g + 1) continue;
    // Canonical order sorts by (order, d), so the pairing is (1,2)(3,4) if it exists.
    const auto negated = [](const BranchPair& a, const BranchPair& b) {
      return a.order == b.order && (a.d + b.d) % a.order == 0;
    };
    if (negated(p[0], p[1]) && negated(p[2], p[3])) out.push_back(d);
  }
  return out;
}

DataSet make_family(std::string_view name, std::span<const std::int64_t> params) {
  if (name == "hyperelliptic" && params.size() == 1) return make_hyperelliptic(static_cast<int>(params[0]));
  if (name == "balanced_superelliptic" && params.size() == 2) {
    return make_balanced_superelliptic(params[0], static_cast<int>(params[1]));
  }
  throw DomainError("unknown family or parameter count: " + std::string(name));
}

}  // namespace liftable
