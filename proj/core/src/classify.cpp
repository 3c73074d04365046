#include <array>

#include "liftable/error.hpp"
#include "liftable/gamma.hpp"
#include "liftable/residue.hpp"

namespace liftable {

GroupDescriptor GroupDescriptor::cyclic(std::int64_t n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  if (n == 1) return trivial_group();
  return {Kind::cyclic, n, 1, 1};
}

GroupDescriptor GroupDescriptor::direct_product(std::int64_t n, std::int64_t m) {
  if (n < 2 || m < 2) throw DomainError("direct product factors must be nontrivial");
  return {Kind::direct_product, n, m, 1};
}

GroupDescriptor GroupDescriptor::semidirect(std::int64_t n, std::int64_t m, std::int64_t twist) {
  if (n < 2 || m < 2) throw DomainError("semidirect product factors must be nontrivial");
  twist = mod(twist, n);
  if (twist == 1 || pow_mod(twist, m, n) != 1) {
    throw DomainError("twist " + std::to_string(twist) + " must satisfy t^" + std::to_string(m) + " = 1 mod " +
                      std::to_string(n) + " and t != 1");
  }
  return {Kind::semidirect, n, m, twist};
}

std::uint64_t GroupDescriptor::order() const {
  switch (kind) {
    case Kind::trivial: return 1;
    case Kind::cyclic: return static_cast<std::uint64_t>(n);
    default: return static_cast<std::uint64_t>(n * m);
  }
}

std::string GroupDescriptor::to_string() const {
  const auto z = [](std::int64_t x) { return "Z_" + std::to_string(x); };
  switch (kind) {
    case Kind::trivial: return "1";
    case Kind::cyclic: return z(n);
    case Kind::direct_product: return z(n) + " × " + z(m);
    case Kind::semidirect: return z(n) + " ⋊_" + std::to_string(twist) + " " + z(m);
  }
  return "?";
}

std::string_view to_string(IrreducibleCase c) {
  switch (c) {
    case IrreducibleCase::i: return "i";
    case IrreducibleCase::ii_a: return "ii(a)";
    case IrreducibleCase::ii_b: return "ii(b)";
    case IrreducibleCase::iii: return "iii";
  }
  return "?";
}

IrreducibleClass classify_irreducible(const GammaVector& gamma) {
  if (gamma.size() != 3) throw DomainError("irreducible classification needs exactly 3 branch points");
  const std::int64_t g = gamma.cover_genus();
  if (g < 2) throw DomainError("irreducible classification needs cover genus >= 2, got " + std::to_string(g));
  const std::int64_t n = gamma.modulus();
  const auto units = units_mod(n);
  IrreducibleClass out;

  // Case (i): c_2 = l c_1, c_3 = l c_2 with l^3 = 1, l != 1.
  for (const auto& u : units) {
    const std::int64_t l = u.value();
    if (l == 1 || pow_mod(l, 3, n) != 1) continue;
    if (mod(l * gamma[1], n) == gamma[2] && mod(l * gamma[2], n) == gamma[3]) {
      out.label = IrreducibleCase::i;
      out.unit = l;
      out.lmod = GroupDescriptor::cyclic(3);
      out.centralizer = GroupDescriptor::cyclic(n);
      out.normalizer = GroupDescriptor::semidirect(n, 3, l);
      return out;
    }
  }

  // Case (ii): some entry is fixed by l (l = 1 mod its branch order), the other two swapped by l.
  // l = 1 is tried first.
  static constexpr std::array<std::array<int, 3>, 3> kOrders{{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}};
  for (const auto& u : units) {
    const std::int64_t l = u.value();
    if (pow_mod(l, 2, n) != 1) continue;
    for (const auto& [i, j, k] : kOrders) {
      if (mod(l - 1, gamma.branch_order(i)) != 0 || mod(l * gamma[j], n) != gamma[k]) continue;
      out.unit = l;
      out.fixed_point = i;
      out.lmod = GroupDescriptor::cyclic(2);
      if (l == 1) {
        out.label = IrreducibleCase::ii_a;
        out.centralizer = out.normalizer = GroupDescriptor::direct_product(n, 2);
        out.structure_asserted = true;
        out.order_bound_holds = n <= 2 * g + 2;
      } else {
        out.label = IrreducibleCase::ii_b;
        out.centralizer = GroupDescriptor::cyclic(n);
        out.normalizer = GroupDescriptor::semidirect(n, 2, l);
      }
      return out;
    }
  }

  out.label = IrreducibleCase::iii;
  out.lmod = GroupDescriptor::trivial_group();
  out.centralizer = out.normalizer = GroupDescriptor::cyclic(n);
  return out;
}

}  // namespace liftable
