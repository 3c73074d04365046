#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftable/dataset.hpp"
#include "liftable/perm_group.hpp"
#include "liftable/permutation.hpp"
#include "liftable/word.hpp"

namespace liftable {

/// (c_1, ..., c_k) mod n, with c_i = (n / n_i) d_i.
class GammaVector {
 public:
  GammaVector() = default;
  /// Reduces entries mod n; throws DomainError if some c_i = 0 or the sum is nonzero mod n.
  GammaVector(std::int64_t n, std::vector<std::int64_t> c);

  std::int64_t modulus() const noexcept { return n_; }
  const std::vector<std::int64_t>& entries() const noexcept { return c_; }
  int size() const noexcept { return static_cast<int>(c_.size()); }
  /// 1-based.
  std::int64_t operator[](int i) const { return c_.at(static_cast<std::size_t>(i - 1)); }
  /// The entries generate Z_n.
  bool generates() const;
  /// Branch order n_i = n / gcd(c_i, n) at point i (1-based).
  std::int64_t branch_order(int i) const;
  /// Genus of the spherical cover described by this vector.
  std::int64_t cover_genus() const;

  std::string to_string() const;

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
  friend auto operator<=>(const GammaVector&, const GammaVector&) = default;

 private:
  std::int64_t n_ = 1;
  std::vector<std::int64_t> c_;
};

/// Requires a valid data set with g0 = 0.
GammaVector gamma_vector(const DataSet& d);

/// Position i of the result is l * c_{sigma^-1(i)}.  Throws for non-unit l or a degree mismatch.
GammaVector act(std::int64_t l, const Permutation& sigma, const GammaVector& gamma);

struct StabEntry {
  std::int64_t unit = 1;
  Permutation sigma;

  friend bool operator==(const StabEntry&, const StabEntry&) = default;
  friend auto operator<=>(const StabEntry&, const StabEntry&) = default;
};

inline constexpr int kMaxBruteForceDegree = 10;

/// Every (l, sigma) in Z_n^x x S_k fixing gamma, sorted.  Requires k <= 10.
std::vector<StabEntry> stabilizer_bruteforce(const GammaVector& gamma);

struct StabilizerReport {
  GammaVector gamma;
  /// Brute-force stabilizer; filled when the cross-check ran (k <= cross_check_degree).
  std::optional<std::vector<StabEntry>> stab;
  PermGroup h1;
  PermGroup h2;
  /// Units l for which the multiset {l c_i} equals {c_i}, ascending.
  std::vector<std::int64_t> units_sub;
  /// Pairs i < j (1-based) with c_i = c_j.
  std::vector<std::pair<int, int>> b;
  /// delta_l: the greedy matching permutation with act(l, delta_l, gamma) = gamma.
  std::map<std::int64_t, Permutation> delta;
  /// Half-twist word of delta_l; always contains 1 -> empty word.
  std::map<std::int64_t, Word> c;
  std::uint64_t index_mod_lmod = 1;
  std::uint64_t index_n_c = 1;
};

struct LiftableOptions {
  /// Compare against the brute-force stabilizer up to this many points.
  int cross_check_degree = 8;
};

/// Throws Error if the cross-check disagrees.
StabilizerReport liftable_images(const GammaVector& gamma, const LiftableOptions& opts = {});

/// All c_i equal and k = 0 mod n.
bool mod_equals_lmod(const GammaVector& gamma);

struct GroupDescriptor {
  enum class Kind { trivial, cyclic, direct_product, semidirect };
  Kind kind = Kind::trivial;
  std::int64_t n = 1;
  std::int64_t m = 1;
  std::int64_t twist = 1;

  static GroupDescriptor trivial_group() { return {}; }
  static GroupDescriptor cyclic(std::int64_t n);
  static GroupDescriptor direct_product(std::int64_t n, std::int64_t m);
  /// Requires twist^m = 1 mod n and twist != 1.
  static GroupDescriptor semidirect(std::int64_t n, std::int64_t m, std::int64_t twist);

  std::uint64_t order() const;
  /// "1", "Z_9", "Z_7 × Z_2", "Z_7 ⋊_2 Z_3".
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

enum class IrreducibleCase { i, ii_a, ii_b, iii };
std::string_view to_string(IrreducibleCase c);

struct IrreducibleClass {
  IrreducibleCase label = IrreducibleCase::iii;
  /// The unit l exhibiting the case (1 for case (iii)).
  std::int64_t unit = 1;
  /// For case (ii), the 1-based position of the entry fixed by l.
  int fixed_point = 0;
  GroupDescriptor lmod;
  GroupDescriptor centralizer;
  GroupDescriptor normalizer;
  /// Case (ii)(a): the direct-product structure is asserted, not derived from a lift relation.
  bool structure_asserted = false;
  /// Case (ii)(a): n <= 2g + 2.
  bool order_bound_holds = true;
};

/// Requires k = 3 and cover genus >= 2.
IrreducibleClass classify_irreducible(const GammaVector& gamma);

}  // namespace liftable
