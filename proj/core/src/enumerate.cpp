#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "liftable/dataset.hpp"
#include "liftable/error.hpp"
#include "liftable/residue.hpp"

namespace liftable {

namespace {

// Branch orders are chosen as a nondecreasing list of divisors of n whose
// Riemann-Hurwitz contributions n - n/m sum to 2g - 2 + 2n.
void choose_orders(const std::vector<std::int64_t>& divisors, std::size_t from, std::int64_t n, std::int64_t remaining,
                   std::vector<std::int64_t>& chosen, std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = from; i < divisors.size(); ++i) {
    const std::int64_t term = n - n / divisors[i];
    if (term > remaining) break;
    chosen.push_back(divisors[i]);
    choose_orders(divisors, i, n, remaining - term, chosen, out);
    chosen.pop_back();
  }
}

bool lcm_conditions_hold(const std::vector<std::int64_t>& orders, std::int64_t n) {
  std::int64_t full = 1;
  for (auto m : orders) full = std::lcm(full, m);
  if (full != n) return false;
  for (std::size_t skip = 0; skip < orders.size(); ++skip) {
    std::int64_t part = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i != skip) part = std::lcm(part, orders[i]);
    }
    if (part != full) return false;
  }
  return true;
}

// All nondecreasing length-`count` lists drawn from `values`.
void multisets(const std::vector<std::int64_t>& values, std::size_t from, std::size_t count,
               std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() == count) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < values.size(); ++i) {
    cur.push_back(values[i]);
    multisets(values, i, count, cur, out);
    cur.pop_back();
  }
}

std::set<DataSet> enumerate_degree(int g, std::int64_t n) {
  std::set<DataSet> found;
  std::vector<std::int64_t> divisors;
  for (std::int64_t m = 2; m <= n; ++m) {
    if (n % m == 0) divisors.push_back(m);
  }
  std::vector<std::vector<std::int64_t>> order_lists;
  std::vector<std::int64_t> chosen;
  choose_orders(divisors, 0, n, 2 * g - 2 + 2 * n, chosen, order_lists);

  for (const auto& orders : order_lists) {
    if (orders.size() < 3 || !lcm_conditions_hold(orders, n)) continue;

    // Group equal orders; each group takes a multiset of units.
    std::vector<std::pair<std::int64_t, std::vector<std::vector<std::int64_t>>>> groups;
    for (std::size_t i = 0; i < orders.size();) {
      std::size_t j = i;
      while (j < orders.size() && orders[j] == orders[i]) ++j;
      std::vector<std::int64_t> units;
      for (const auto& u : units_mod(orders[i])) units.push_back(u.value());
      std::vector<std::vector<std::int64_t>> choices;
      std::vector<std::int64_t> cur;
      multisets(units, 0, j - i, cur, choices);
      groups.emplace_back(orders[i], std::move(choices));
      i = j;
    }

    std::vector<std::size_t> idx(groups.size(), 0);
    while (true) {
      std::int64_t angle = 0;
      std::vector<BranchPair> pairs;
      for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const std::int64_t m = groups[gi].first;
        for (auto d : groups[gi].second[idx[gi]]) {
          pairs.push_back({d, m});
          angle = (angle + (n / m) * d) % n;
        }
      }
      if (angle == 0) found.insert(canonical_form(DataSet(n, 0, std::move(pairs))));

      std::size_t gi = 0;
      while (gi < groups.size() && ++idx[gi] == groups[gi].second.size()) idx[gi++] = 0;
      if (gi == groups.size()) break;
    }
  }
  return found;
}

}  // namespace

std::vector<DataSet> enumerate_spherical(int g, int jobs) {
  if (g < 2 || g > 30) throw DomainError("enumerate_spherical: genus " + std::to_string(g) + " outside 2..30");
  const std::int64_t max_degree = 4 * static_cast<std::int64_t>(g) + 2;
  jobs = std::clamp(jobs, 1, 64);

  std::vector<std::set<DataSet>> shards(static_cast<std::size_t>(jobs));
  auto work = [&](int shard) {
    for (std::int64_t n = 2 + shard; n <= max_degree; n += jobs) {
      auto part = enumerate_degree(g, n);
      shards[static_cast<std::size_t>(shard)].merge(part);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int s = 0; s < jobs; ++s) pool.emplace_back(work, s);
  }

  std::set<DataSet> merged;
  for (auto& s : shards) merged.merge(s);
  return {merged.begin(), merged.end()};
}

}  // namespace liftable
