#include "liftable/residue.hpp"

#include <numeric>

#include "liftable/error.hpp"

namespace liftable {

namespace {
__extension__ using i128 = __int128;
}  // namespace

std::int64_t mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw DomainError("modulus must be positive, got " + std::to_string(m));
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
  if (e < 0) throw DomainError("negative exponent in pow_mod");
  i128 base = mod(a, m);
  i128 acc = 1 % m;
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && m != 1) {
    throw DomainError(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Residue::Residue(std::int64_t value, std::int64_t modulus) : value_(mod(value, modulus)), modulus_(modulus) {}

bool Residue::is_unit() const { return std::gcd(value_, modulus_) == 1 || modulus_ == 1; }

void Residue::check_same_modulus(const Residue& o) const {
  if (modulus_ != o.modulus_) {
    throw DomainError("residue moduli differ: " + std::to_string(modulus_) + " vs " + std::to_string(o.modulus_));
  }
}

Residue Residue::operator+(const Residue& o) const {
  check_same_modulus(o);
  return {value_ + o.value_, modulus_};
}

Residue Residue::operator-(const Residue& o) const {
  check_same_modulus(o);
  return {value_ - o.value_, modulus_};
}

Residue Residue::operator*(const Residue& o) const {
  check_same_modulus(o);
  return {static_cast<std::int64_t>(static_cast<i128>(value_) * o.value_ % modulus_), modulus_};
}

Residue Residue::operator-() const { return {-value_, modulus_}; }

Residue Residue::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return {pow_mod(value_, e, modulus_), modulus_};
}

Residue Residue::inverse() const { return {inverse_mod(value_, modulus_), modulus_}; }

std::vector<Residue> units_mod(std::int64_t n) {
  if (n < 1) throw DomainError("units_mod requires n >= 1");
  std::vector<Residue> out;
  if (n == 1) {
    out.emplace_back(0, 1);
    return out;
  }
  for (std::int64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) out.emplace_back(a, n);
  }
  return out;
}

}  // namespace liftable
