#include "liftable/gamma.hpp"

#include <algorithm>
#include <numeric>

#include "liftable/error.hpp"
#include "liftable/residue.hpp"

namespace liftable {

GammaVector::GammaVector(std::int64_t n, std::vector<std::int64_t> c) : n_(n), c_(std::move(c)) {
  if (n < 1) throw DomainError("gamma vector modulus must be positive");
  std::int64_t sum = 0;
  for (auto& x : c_) {
    x = mod(x, n);
    if (x == 0 && n > 1) throw DomainError("gamma vector entries must be nonzero mod " + std::to_string(n));
    sum = mod(sum + x, n);
  }
  if (sum != 0) throw DomainError("gamma vector entries must sum to 0 mod " + std::to_string(n));
}

bool GammaVector::generates() const {
  std::int64_t g = n_;
  for (auto x : c_) g = std::gcd(g, x);
  return g == 1;
}

std::int64_t GammaVector::branch_order(int i) const { return n_ / std::gcd(n_, (*this)[i]); }

std::int64_t GammaVector::cover_genus() const {
  // 2g - 2 = -2n + sum (n - n / n_i), and n / n_i = gcd(c_i, n).
  std::int64_t twice = -2 * n_ + 2;
  for (auto x : c_) twice += n_ - std::gcd(x, n_);
  return twice / 2;
}

std::string GammaVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ") mod " + std::to_string(n_);
}

GammaVector gamma_vector(const DataSet& d) {
  if (d.orbifold_genus() != 0) throw DomainError("gamma vectors are only built for spherical data sets");
  const auto report = validate(d);
  if (!report.valid()) throw DomainError("gamma vector of an invalid data set " + format_dataset(d));
  std::vector<std::int64_t> c;
  c.reserve(d.num_points());
  for (const auto& p : d.pairs()) c.push_back(d.degree() / p.order * p.d);
  return GammaVector(d.degree(), std::move(c));
}

GammaVector act(std::int64_t l, const Permutation& sigma, const GammaVector& gamma) {
  const std::int64_t n = gamma.modulus();
  if (std::gcd(mod(l, n), n) != 1) throw DomainError(std::to_string(l) + " is not a unit mod " + std::to_string(n));
  if (sigma.degree() != gamma.size()) throw DomainError("permutation degree does not match gamma vector length");
  const Permutation inv = sigma.inverse();
  std::vector<std::int64_t> out(static_cast<std::size_t>(gamma.size()));
  for (int i = 1; i <= gamma.size(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = mod(static_cast<std::int64_t>(Residue(l, n).value()) * gamma[inv.image(i)], n);
  }
  return GammaVector(n, std::move(out));
}

std::vector<StabEntry> stabilizer_bruteforce(const GammaVector& gamma) {
  const int k = gamma.size();
  if (k > kMaxBruteForceDegree) {
    throw CapacityError("brute-force stabilizer limited to " + std::to_string(kMaxBruteForceDegree) + " points");
  }
  const std::int64_t n = gamma.modulus();
  const auto& c = gamma.entries();
  std::vector<StabEntry> out;
  for (const auto& unit : units_mod(n)) {
    const std::int64_t l = unit.value();
    std::vector<int> inv(static_cast<std::size_t>(k));
    std::iota(inv.begin(), inv.end(), 0);
    // inv enumerates sigma^-1 over all of S_k.
    do {
      bool fixes = true;
      for (std::size_t i = 0; i < c.size() && fixes; ++i) fixes = mod(l * c[static_cast<std::size_t>(inv[i])], n) == c[i];
      if (fixes) {
        std::vector<int> images(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) images[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])] = i + 1;
        out.push_back({l, Permutation(std::move(images))});
      }
    } while (std::next_permutation(inv.begin(), inv.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// tau(i) = first unmatched j (ascending) with l c_j = c_i; nullopt if the multisets differ.
std::optional<Permutation> greedy_delta(const GammaVector& gamma, std::int64_t l) {
  const int k = gamma.size();
  const std::int64_t n = gamma.modulus();
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  std::vector<int> tau(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    int match = 0;
    for (int j = 1; j <= k && match == 0; ++j) {
      if (!used[static_cast<std::size_t>(j - 1)] && mod(l * gamma[j], n) == gamma[i]) match = j;
    }
    if (match == 0) return std::nullopt;
    used[static_cast<std::size_t>(match - 1)] = true;
    tau[static_cast<std::size_t>(i - 1)] = match;
  }
  return Permutation(std::move(tau)).inverse();
}

void cross_check(const StabilizerReport& r, const std::vector<StabEntry>& stab) {
  std::vector<Permutation> proj1, proj2;
  std::vector<std::int64_t> units;
  for (const auto& e : stab) {
    proj1.push_back(e.sigma);
    if (e.unit == 1) proj2.push_back(e.sigma);
    units.push_back(e.unit);
  }
  std::sort(proj1.begin(), proj1.end());
  proj1.erase(std::unique(proj1.begin(), proj1.end()), proj1.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());
  if (proj1 != r.h1.elements()) throw Error("H1 from generators differs from the stabilizer projection for " + r.gamma.to_string());
  if (proj2 != r.h2.elements()) throw Error("H2 from generators differs from the pure stabilizer for " + r.gamma.to_string());
  if (units != r.units_sub) throw Error("unit subgroup differs from the stabilizer projection for " + r.gamma.to_string());
}

}  // namespace

StabilizerReport liftable_images(const GammaVector& gamma, const LiftableOptions& opts) {
  const int k = gamma.size();
  if (k < 1 || k > kMaxGroupDegree) {
    throw CapacityError("liftable images limited to " + std::to_string(kMaxGroupDegree) + " points");
  }
  StabilizerReport r;
  r.gamma = gamma;

  std::vector<Permutation> b_gens;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (gamma[i] == gamma[j]) {
        r.b.emplace_back(i, j);
        b_gens.push_back(Permutation::transposition(k, i, j));
      }
    }
  }
  r.h2 = perm_closure(b_gens, k);

  std::vector<Permutation> h1_gens = b_gens;
  for (const auto& unit : units_mod(gamma.modulus())) {
    const auto delta = greedy_delta(gamma, unit.value());
    if (!delta) continue;
    r.units_sub.push_back(unit.value());
    r.delta.emplace(unit.value(), *delta);
    r.c.emplace(unit.value(), half_twist_word(*delta));
    if (!delta->is_identity()) h1_gens.push_back(*delta);
  }
  r.h1 = perm_closure(h1_gens, k);

  if (r.h1.order() != r.h2.order() * r.units_sub.size()) {
    throw Error("|H1| != |H2| * |units| for " + gamma.to_string());
  }
  r.index_mod_lmod = factorial(k) / r.h1.order();
  r.index_n_c = r.units_sub.size();

  if (k <= std::min(opts.cross_check_degree, kMaxBruteForceDegree)) {
    auto stab = stabilizer_bruteforce(gamma);
    cross_check(r, stab);
    r.stab = std::move(stab);
  }
  return r;
}

bool mod_equals_lmod(const GammaVector& gamma) {
  const auto& c = gamma.entries();
  const bool all_equal = std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
  return all_equal && static_cast<std::int64_t>(c.size()) % gamma.modulus() == 0;
}

}  // namespace liftable
