#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "liftable/permutation.hpp"

namespace liftable {

/// Degree guard for any group-level computation.
inline constexpr int kMaxGroupDegree = 12;
/// Largest group whose elements are stored explicitly (|S_10| fits).
inline constexpr std::uint64_t kMaxMaterializedOrder = 4'000'000;
/// Largest coset table built for Reidemeister-Schreier rewriting.
inline constexpr std::uint64_t kMaxCosets = 200'000;

std::uint64_t factorial(int k);

/// A subgroup of S_k, given by generators.
///
/// The elements are materialized (sorted by image array) whenever the order
/// is at most kMaxMaterializedOrder.  Two shapes are recognized without
/// materialization: the full symmetric group, and groups generated by
/// transpositions (a product of symmetric groups on the connected components
/// of the transposition graph), so S_11 and S_12 remain usable.
class PermGroup {
 public:
  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }

  bool materialized() const noexcept { return !codes_.empty(); }
  bool is_symmetric() const noexcept { return order_ == factorial(degree_); }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Sorted element list.  Symmetric groups are listed on demand; any other
  /// unmaterialized group throws CapacityError.
  std::vector<Permutation> elements() const;
  /// Packed codes of the sorted elements (empty when not materialized).
  const std::vector<std::uint64_t>& element_codes() const noexcept { return codes_; }

  bool contains(const Permutation& p) const;
  /// Every element of *this lies in other.
  bool is_subgroup_of(const PermGroup& other) const;

  /// Key identifying the right coset H*g: equal keys iff same coset.
  std::uint64_t right_coset_key(const Permutation& g) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  friend PermGroup perm_closure(std::span<const Permutation>, int);
  friend PermGroup perm_group_from_elements(int, std::vector<Permutation>);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> codes_;
  // Component label per point when generated by transpositions, else empty.
  std::vector<int> young_blocks_;
};

/// The subgroup of S_k generated by gens.
PermGroup perm_closure(std::span<const Permutation> gens, int k);

/// Wraps an explicit element list; throws DomainError unless it is a subgroup.
PermGroup perm_group_from_elements(int k, std::vector<Permutation> elements);

/// Right-coset action table of H in S_k under the acting generators.
struct CosetTable {
  int num_cosets = 0;
  /// action[c][j]: coset reached from coset c by acting generator j, (H g) -> H (g * a_j).
  std::vector<std::vector<int>> action;
  /// Transversal representative of each coset (coset 0 is H, represented by the identity).
  std::vector<Permutation> representatives;
  /// BFS tree: parent[c] = (coset, generator) that first reached c; (-1, -1) for coset 0.
  std::vector<std::pair<int, int>> parent;
};

/// Cosets are numbered in BFS order from H, trying generators in input order.
CosetTable coset_table(const PermGroup& h, std::span<const Permutation> acting_gens);

}  // namespace liftable
