#include "liftable/permutation.hpp"

#include <cctype>
#include <numeric>

#include "liftable/error.hpp"

namespace liftable {

namespace {

void check_degree(int k) {
  if (k < 0 || k > Permutation::kMaxPackedDegree) {
    throw DomainError("permutation degree " + std::to_string(k) + " outside [0, " +
                      std::to_string(Permutation::kMaxPackedDegree) + "]");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images_one_based) {
  const int k = static_cast<int>(images_one_based.size());
  check_degree(k);
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  images_.reserve(static_cast<std::size_t>(k));
  for (int v : images_one_based) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("image list is not a permutation of 1.." + std::to_string(k));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    images_.push_back(static_cast<std::uint8_t>(v - 1));
  }
}

Permutation Permutation::identity(int k) {
  check_degree(k);
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(k));
  std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
  return p;
}

Permutation Permutation::transposition(int k, int a, int b) {
  if (a < 1 || b < 1 || a > k || b > k || a == b) {
    throw DomainError("invalid transposition (" + std::to_string(a) + "," + std::to_string(b) + ") of degree " +
                      std::to_string(k));
  }
  Permutation p = identity(k);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(k);
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > k || to < 1 || to > k) {
        throw DomainError("cycle point out of range 1.." + std::to_string(k));
      }
      if (used[static_cast<std::size_t>(from - 1)]) throw DomainError("cycles are not disjoint");
      used[static_cast<std::size_t>(from - 1)] = true;
      p.images_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int k) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, pos + 1); };
  skip_ws();
  if (pos == text.size()) fail("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    std::vector<int> cyc;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected point");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(k, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_transposition() const noexcept {
  int moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      ++moved;
      if (images_[images_[i]] != i) return false;
    }
  }
  return moved == 2;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cyc;
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(static_cast<int>(cur) + 1);
      cur = images_[cur];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

std::uint64_t Permutation::pack() const {
  std::uint64_t code = 0;
  for (auto v : images_) code = (code << 4) | v;
  return code;
}

Permutation Permutation::unpack(std::uint64_t code, int k) {
  check_degree(k);
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code & 0xF);
    code >>= 4;
  }
  return p;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) {
    throw DomainError("cannot compose permutations of degree " + std::to_string(s.degree()) + " and " +
                      std::to_string(t.degree()));
  }
  Permutation p;
  p.images_.resize(s.images_.size());
  for (std::size_t i = 0; i < t.images_.size(); ++i) p.images_[i] = s.images_[t.images_[i]];
  return p;
}

void require_degree(std::span<const Permutation> perms, int k, std::string_view what) {
  for (const auto& p : perms) {
    if (p.degree() != k) {
      throw DomainError(std::string(what) + ": permutation " + p.to_string() + " has degree " +
                        std::to_string(p.degree()) + ", expected " + std::to_string(k));
    }
  }
}

}  // namespace liftable
