#include "liftable/perm_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "liftable/error.hpp"

namespace liftable {

namespace {

using Images = std::array<std::uint8_t, Permutation::kMaxPackedDegree>;

Images unpack_images(std::uint64_t code, int k) {
  Images a{};
  for (int i = k - 1; i >= 0; --i) {
    a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code & 0xF);
    code >>= 4;
  }
  return a;
}

std::uint64_t pack_images(const Images& a, int k) {
  std::uint64_t code = 0;
  for (int i = 0; i < k; ++i) code = (code << 4) | a[static_cast<std::size_t>(i)];
  return code;
}

// code(s * t) with right-to-left composition.
std::uint64_t compose_codes(std::uint64_t s, std::uint64_t t, int k) {
  const Images a = unpack_images(s, k);
  const Images b = unpack_images(t, k);
  Images c{};
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = a[b[static_cast<std::size_t>(i)]];
  return pack_images(c, k);
}

void check_group_degree(int k) {
  if (k < 1 || k > kMaxGroupDegree) {
    throw CapacityError("group degree " + std::to_string(k) + " outside supported range 1.." +
                        std::to_string(kMaxGroupDegree));
  }
}

std::vector<std::uint64_t> bfs_closure(const std::vector<std::uint64_t>& gens, int k) {
  const std::uint64_t id = Permutation::identity(k).pack();
  std::unordered_set<std::uint64_t> seen{id};
  std::vector<std::uint64_t> order{id};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint64_t x = order[head];
    for (std::uint64_t s : gens) {
      const std::uint64_t y = compose_codes(x, s, k);
      if (seen.insert(y).second) {
        if (order.size() >= kMaxMaterializedOrder) {
          throw CapacityError("group generated in degree " + std::to_string(k) + " exceeds " +
                              std::to_string(kMaxMaterializedOrder) + " elements");
        }
        order.push_back(y);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Permutation> PermGroup::elements() const {
  if (!materialized() && is_symmetric() && order_ <= kMaxMaterializedOrder) {
    std::vector<Permutation> out;
    out.reserve(order_);
    std::vector<int> images(static_cast<std::size_t>(degree_));
    std::iota(images.begin(), images.end(), 1);
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }
  if (!materialized()) {
    throw CapacityError("group of order " + std::to_string(order_) + " is not materialized");
  }
  std::vector<Permutation> out;
  out.reserve(codes_.size());
  for (auto c : codes_) out.push_back(Permutation::unpack(c, degree_));
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (materialized()) return std::binary_search(codes_.begin(), codes_.end(), p.pack());
  if (!young_blocks_.empty()) {
    for (int i = 1; i <= degree_; ++i) {
      if (young_blocks_[static_cast<std::size_t>(p.image(i) - 1)] != young_blocks_[static_cast<std::size_t>(i - 1)]) {
        return false;
      }
    }
    return true;
  }
  return is_symmetric();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_ || other.order_ % order_ != 0) return false;
  return std::all_of(generators_.begin(), generators_.end(), [&](const Permutation& g) { return other.contains(g); });
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.order_ == b.order_ && a.is_subgroup_of(b);
}

std::uint64_t PermGroup::right_coset_key(const Permutation& g) const {
  if (is_symmetric()) return 0;
  if (!young_blocks_.empty()) {
    Images labels{};
    for (int i = 0; i < degree_; ++i) {
      labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(young_blocks_[g.images()[static_cast<std::size_t>(i)]]);
    }
    return pack_images(labels, degree_);
  }
  const std::uint64_t gc = g.pack();
  std::uint64_t best = ~std::uint64_t{0};
  for (auto h : codes_) best = std::min(best, compose_codes(h, gc, degree_));
  return best;
}

PermGroup perm_closure(std::span<const Permutation> gens, int k) {
  check_group_degree(k);
  require_degree(gens, k, "perm_closure");
  PermGroup g;
  g.degree_ = k;
  g.generators_.assign(gens.begin(), gens.end());

  std::vector<std::uint64_t> codes;
  bool all_transpositions = true;
  for (const auto& p : gens) {
    if (p.is_identity()) continue;
    codes.push_back(p.pack());
    all_transpositions = all_transpositions && p.is_transposition();
  }

  if (all_transpositions) {
    std::vector<int> parent(static_cast<std::size_t>(k));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (const auto& p : gens) {
      if (p.is_identity()) continue;
      const auto cs = p.cycles();
      int a = find(cs[0][0] - 1), b = find(cs[0][1] - 1);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    g.young_blocks_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      g.young_blocks_[static_cast<std::size_t>(i)] = find(i);
      ++sizes[static_cast<std::size_t>(find(i))];
    }
    g.order_ = 1;
    for (int s : sizes) g.order_ *= factorial(s);
    if (g.order_ <= kMaxMaterializedOrder && !g.is_symmetric()) g.codes_ = bfs_closure(codes, k);
    return g;
  }

  g.codes_ = bfs_closure(codes, k);
  g.order_ = g.codes_.size();
  return g;
}

PermGroup perm_group_from_elements(int k, std::vector<Permutation> elements) {
  check_group_degree(k);
  require_degree(elements, k, "perm_group_from_elements");
  if (elements.size() > kMaxMaterializedOrder) throw CapacityError("element list too large to materialize");
  std::vector<std::uint64_t> codes;
  codes.reserve(elements.size());
  for (const auto& e : elements) codes.push_back(e.pack());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  const std::uint64_t id = Permutation::identity(k).pack();
  if (!std::binary_search(codes.begin(), codes.end(), id)) throw DomainError("element list lacks the identity");
  for (auto a : codes) {
    for (auto b : codes) {
      if (!std::binary_search(codes.begin(), codes.end(), compose_codes(a, b, k))) {
        throw DomainError("element list is not closed under composition");
      }
    }
  }
  PermGroup g;
  g.degree_ = k;
  g.order_ = codes.size();
  for (auto c : codes) {
    if (c != id) g.generators_.push_back(Permutation::unpack(c, k));
  }
  g.codes_ = std::move(codes);
  return g;
}

CosetTable coset_table(const PermGroup& h, std::span<const Permutation> acting_gens) {
  const int k = h.degree();
  require_degree(acting_gens, k, "coset_table");
  const std::uint64_t index = factorial(k) / h.order();
  if (index > kMaxCosets) {
    throw CapacityError("subgroup index " + std::to_string(index) + " exceeds coset cap " + std::to_string(kMaxCosets));
  }
  CosetTable t;
  std::unordered_map<std::uint64_t, int> ids;
  t.representatives.push_back(Permutation::identity(k));
  t.parent.emplace_back(-1, -1);
  ids.emplace(h.right_coset_key(t.representatives[0]), 0);
  for (std::size_t c = 0; c < t.representatives.size(); ++c) {
    std::vector<int> row;
    row.reserve(acting_gens.size());
    for (std::size_t j = 0; j < acting_gens.size(); ++j) {
      Permutation g = t.representatives[c] * acting_gens[j];
      auto [it, inserted] = ids.emplace(h.right_coset_key(g), static_cast<int>(t.representatives.size()));
      if (inserted) {
        t.representatives.push_back(std::move(g));
        t.parent.emplace_back(static_cast<int>(c), static_cast<int>(j));
      }
      row.push_back(it->second);
    }
    t.action.push_back(std::move(row));
  }
  t.num_cosets = static_cast<int>(t.representatives.size());
  return t;
}

}  // namespace liftable
