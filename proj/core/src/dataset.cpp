#include "liftable/dataset.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "liftable/error.hpp"
#include "liftable/residue.hpp"

namespace liftable {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt lcm_of(const std::vector<BranchPair>& pairs, std::size_t skip) {
  BigInt acc = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == skip) continue;
    acc = boost::multiprecision::lcm(acc, BigInt(pairs[i].order));
  }
  return acc;
}

}  // namespace

DataSet::DataSet(std::int64_t n, std::int64_t g0, std::vector<BranchPair> pairs)
    : n_(n), g0_(g0), pairs_(std::move(pairs)) {
  if (n_ < 2) throw DomainError("data set degree must be at least 2, got " + std::to_string(n_));
  if (g0_ < 0) throw DomainError("orbifold genus must be non-negative");
  if (g0_ == 0 && pairs_.empty()) throw DomainError("a spherical data set needs at least one branch pair");
  for (auto& p : pairs_) {
    if (p.order < 1) throw DomainError("branch order must be positive, got " + std::to_string(p.order));
    p.d = mod(p.d, p.order);
  }
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::cond_i: return "cond_i";
    case Violation::cond_ii: return "cond_ii";
    case Violation::cond_iii: return "cond_iii";
    case Violation::cond_iv: return "cond_iv";
    case Violation::cond_v: return "cond_v";
    case Violation::rh_non_integer: return "rh_non_integer";
  }
  return "unknown";
}

std::optional<std::int64_t> riemann_hurwitz_genus(const DataSet& d) {
  const std::int64_t n = d.degree();
  Rational two_g_minus_two = Rational(n) * (2 * d.orbifold_genus() - 2);
  for (const auto& p : d.pairs()) two_g_minus_two += Rational(n) * (Rational(1) - Rational(1, p.order));
  if (denominator(two_g_minus_two) != 1) return std::nullopt;
  const BigInt num = numerator(two_g_minus_two);
  if (num % 2 != 0) return std::nullopt;
  return static_cast<std::int64_t>(num / 2 + 1);
}

ValidationReport validate(const DataSet& d) {
  ValidationReport r;
  const std::int64_t n = d.degree();
  const auto& pairs = d.pairs();

  const bool cond_i = std::all_of(pairs.begin(), pairs.end(), [&](const BranchPair& p) {
    return p.order >= 2 && n % p.order == 0 && std::gcd(p.d, p.order) == 1;
  });
  if (!cond_i) r.violations.push_back(Violation::cond_i);

  const BigInt full = lcm_of(pairs, pairs.size());
  bool cond_ii = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) cond_ii = cond_ii && lcm_of(pairs, i) == full;
  if (!cond_ii) r.violations.push_back(Violation::cond_ii);

  if (d.orbifold_genus() == 0 && full != n) r.violations.push_back(Violation::cond_iii);

  Rational angle_sum = 0;
  for (const auto& p : pairs) angle_sum += Rational(n) * p.d / p.order;
  if (denominator(angle_sum) != 1 || numerator(angle_sum) % n != 0) r.violations.push_back(Violation::cond_iv);

  const auto genus = riemann_hurwitz_genus(d);
  if (!genus) {
    r.violations.push_back(Violation::rh_non_integer);
  } else if (*genus < 0) {
    r.violations.push_back(Violation::cond_v);
  }

  if (r.violations.empty()) {
    r.genus = genus;
    r.scope_genus = *genus < 2;
  }
  return r;
}

void require_valid(const DataSet& d, std::string_view what) {
  const auto r = validate(d);
  if (!r.valid()) {
    std::string msg = std::string(what) + ": invalid data set " + format_dataset(d) + " (";
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      if (i) msg += ", ";
      msg += to_string(r.violations[i]);
    }
    throw DomainError(msg + ")");
  }
  if (r.scope_genus) {
    throw DomainError(std::string(what) + ": genus " + std::to_string(*r.genus) + " < 2 is out of scope");
  }
}

std::optional<EquivalenceWitness> are_equivalent(const DataSet& a, const DataSet& b) {
  if (a.degree() != b.degree() || a.orbifold_genus() != b.orbifold_genus() || a.num_points() != b.num_points()) {
    return std::nullopt;
  }
  const int k = static_cast<int>(a.num_points());
  for (const auto& unit : units_mod(a.degree())) {
    const std::int64_t l = unit.value();
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(k));
    for (const auto& p : a.pairs()) {
      const BranchPair target{mod(l * p.d, p.order), p.order};
      int match = -1;
      for (int j = 0; j < k; ++j) {
        if (!used[static_cast<std::size_t>(j)] && b.pairs()[static_cast<std::size_t>(j)] == target) {
          match = j;
          break;
        }
      }
      if (match < 0) break;
      used[static_cast<std::size_t>(match)] = true;
      images.push_back(match + 1);
    }
    if (static_cast<int>(images.size()) == k) {
      return EquivalenceWitness{l, Permutation(std::move(images))};
    }
  }
  return std::nullopt;
}

DataSet canonical_form(const DataSet& d) {
  std::vector<BranchPair> best;
  for (const auto& unit : units_mod(d.degree())) {
    std::vector<BranchPair> cand = d.pairs();
    for (auto& p : cand) p.d = mod(unit.value() * p.d, p.order);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return DataSet(d.degree(), d.orbifold_genus(), std::move(best));
}

}  // namespace liftable
