#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liftable {

/// A permutation of the points {1, ..., k}.
///
/// Points are 1-based in every public interface (cycle notation, `image`,
/// `transposition`).  Composition is right-to-left: (s * t)(i) = s(t(i)).
class Permutation {
 public:
  /// Largest degree that fits the 4-bit packed encoding.
  static constexpr int kMaxPackedDegree = 16;

  Permutation() = default;

  /// From the 1-based image list [s(1), ..., s(k)].  Throws DomainError unless bijective.
  explicit Permutation(std::vector<int> images_one_based);

  static Permutation identity(int k);
  /// The transposition (a, b), 1 <= a, b <= k, a != b.
  static Permutation transposition(int k, int a, int b);
  /// Product of the given disjoint cycles, each written with 1-based points.
  static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);
  /// Cycle notation such as "(1,2)(3,4)" or "()".
  static Permutation parse(std::string_view text, int k);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  /// s(i) for 1-based i.
  int image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)) + 1; }
  /// 0-based view of the image array.
  std::span<const std::uint8_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_transposition() const noexcept;
  Permutation inverse() const;
  std::uint64_t order() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  /// 4 bits per point, first image in the most significant nibble used, so that
  /// numeric order of codes equals lexicographic order of image arrays.
  std::uint64_t pack() const;
  static Permutation unpack(std::uint64_t code, int k);

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// Raises DomainError when any permutation has degree other than k.
void require_degree(std::span<const Permutation> perms, int k, std::string_view what);

}  // namespace liftable
