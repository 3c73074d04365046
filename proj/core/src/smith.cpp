#include "liftable/smith.hpp"

#include <algorithm>
#include <utility>

#include "liftable/error.hpp"

namespace liftable {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("IntMatrix rows must have equal length");
    for (long long v : r) data_.emplace_back(v);
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t c = 0; c < cols_; ++c) {
    const BigInt& s = (*this)(src, c);
    if (!s.is_zero()) (*this)(dst, c) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t r = 0; r < rows_; ++r) {
    const BigInt& s = (*this)(r, src);
    if (!s.is_zero()) (*this)(r, dst) += factor * s;
  }
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    std::size_t pr = rows, pc = cols;
    BigInt best;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        const BigInt& v = m(r, c);
        if (v.is_zero()) continue;
        BigInt a = abs(v);
        if (pr == rows || a < best) {
          best = a;
          pr = r;
          pc = c;
          if (best == 1) break;
        }
      }
      if (pr != rows && best == 1) break;
    }
    if (pr == rows) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t).is_zero()) continue;
        BigInt q = m(r, t) / m(t, t);
        m.add_row_multiple(r, t, -q);
        if (!m(r, t).is_zero()) {
          // Remainder is smaller than the pivot; promote it.
          m.swap_rows(t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c).is_zero()) continue;
        BigInt q = m(t, c) / m(t, t);
        m.add_col_multiple(c, t, -q);
        if (!m(t, c).is_zero()) {
          m.swap_cols(t, c);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m(t, t)));
    ++t;
  }

  // Enforce the divisibility chain: diag(a, b) ~ diag(gcd, lcm).
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      if (g != diag[i]) {
        BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }

  SmithForm out;
  out.rank = diag.size();
  out.free_rank = cols - diag.size();
  out.invariant_factors = std::move(diag);
  return out;
}

}  // namespace liftable
