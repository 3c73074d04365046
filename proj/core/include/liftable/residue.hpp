#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace liftable {

/// Non-negative remainder of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// a^e mod m by square-and-multiply; e >= 0.
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Euler's totient by trial division.
std::int64_t euler_phi(std::int64_t n);

/// An element of Z_n, always held in [0, n).
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  bool is_unit() const;

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue pow(std::int64_t e) const;
  Residue inverse() const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  void check_same_modulus(const Residue& o) const;

  std::int64_t value_;
  std::int64_t modulus_;
};

/// The unit group Z_n^x in ascending order.  For n = 1 the ring is zero and
/// the unit group is trivial; it is returned as the single residue 0 (= 1).
std::vector<Residue> units_mod(std::int64_t n);

}  // namespace liftable
