#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftable/permutation.hpp"

namespace liftable {

/// One branch point: local rotation datum d (a unit mod `order`) and its order n_i.
struct BranchPair {
  std::int64_t d = 0;
  std::int64_t order = 0;

  friend bool operator==(const BranchPair&, const BranchPair&) = default;
  /// Canonical ordering is by (order, d).
  friend std::strong_ordering operator<=>(const BranchPair& a, const BranchPair& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.d <=> b.d;
  }
};

/// A cyclic data set (n, g0; (d_1, n_1), ..., (d_k, n_k)).
///
/// Pairs keep the order they were given in; each d is reduced into [0, n_i)
/// on construction, so (-1, n) is stored as (n - 1, n).  Structural checks
/// only; the arithmetic conditions live in validate().
class DataSet {
 public:
  DataSet() = default;
  /// Throws DomainError for n < 2, g0 < 0, n_i < 1, or no pairs when g0 = 0.
  DataSet(std::int64_t n, std::int64_t g0, std::vector<BranchPair> pairs);

  std::int64_t degree() const noexcept { return n_; }
  std::int64_t orbifold_genus() const noexcept { return g0_; }
  const std::vector<BranchPair>& pairs() const noexcept { return pairs_; }
  std::size_t num_points() const noexcept { return pairs_.size(); }

  friend bool operator==(const DataSet&, const DataSet&) = default;
  friend auto operator<=>(const DataSet&, const DataSet&) = default;

 private:
  std::int64_t n_ = 2;
  std::int64_t g0_ = 0;
  std::vector<BranchPair> pairs_;
};

enum class Violation {
  cond_i,          ///< n_i | n, n_i >= 2, gcd(d_i, n_i) = 1
  cond_ii,         ///< lcm unchanged by deleting any single n_i
  cond_iii,        ///< g0 = 0 implies lcm(n_i) = n
  cond_iv,         ///< sum (n / n_i) d_i = 0 mod n
  cond_v,          ///< Riemann-Hurwitz genus is an integer >= 0
  rh_non_integer,  ///< Riemann-Hurwitz genus is not an integer
};

std::string_view to_string(Violation v);

struct ValidationReport {
  /// Present iff there are no violations.
  std::optional<std::int64_t> genus;
  std::vector<Violation> violations;
  /// Valid, but genus < 2: outside the range the classification operations accept.
  bool scope_genus = false;

  bool valid() const noexcept { return violations.empty(); }
};

ValidationReport validate(const DataSet& d);

/// Riemann-Hurwitz: 2g - 2 = n (2 g0 - 2) + sum n (1 - 1/n_i), evaluated
/// exactly; nullopt when the right-hand side does not give an integer g.
std::optional<std::int64_t> riemann_hurwitz_genus(const DataSet& d);

/// Throws DomainError unless d validates with genus >= 2.
void require_valid(const DataSet& d, std::string_view what);

/// Text form `(n,g0;(d1,n1),(d2,n2),...)`.  The parser also accepts the
/// repetition suffix `(d,m)_r` for r consecutive copies and negative d.
DataSet parse_dataset(std::string_view text);
std::string format_dataset(const DataSet& d);

struct EquivalenceWitness {
  std::int64_t unit = 1;
  /// sigma(i) = j means pair i of the first set maps to pair j of the second.
  Permutation sigma;
};

/// Searches all units l mod n; the permutation is a multiset matching.
std::optional<EquivalenceWitness> are_equivalent(const DataSet& a, const DataSet& b);

/// The lexicographically least sorted pair list over all units l mod n.
DataSet canonical_form(const DataSet& d);

/// Canonical representatives of every spherical cyclic action of genus g,
/// scanning degrees 2 <= n <= 4g + 2, ordered by (n, pairs).
/// Requires 2 <= g <= 30.  `jobs` > 1 shards the degree scan across threads.
std::vector<DataSet> enumerate_spherical(int g, int jobs = 1);

/// (2, 0; (1,2) x (2g+2)).
DataSet make_hyperelliptic(int g);
/// (n, 0; (1,n), (-1,n), ...) with k + 1 alternating pairs, in that order.
DataSet make_balanced_superelliptic(std::int64_t n, int k);
/// Doubles an irreducible (n,0;(d1,n1),(d2,n2),(1,n)) into
/// (n,0;(d1,n1),(-d1,n1),(d2,n2),(-d2,n2)), returned in canonical form.
DataSet make_doubled(const DataSet& irreducible);
/// Every (n,0;(d1,n1),(-d1,n1),(d2,n2),(-d2,n2)) of genus g with n > g + 1, canonical and sorted.
std::vector<DataSet> enumerate_doubled(int g);
/// Dispatch by name: "hyperelliptic" {g}, "balanced_superelliptic" {n, k}.
DataSet make_family(std::string_view name, std::span<const std::int64_t> params);

}  // namespace liftable
