#pragma once
// Exact Gaussian elimination over Q and F_p.

#include <cstdint>
#include <optional>
#include <vector>

#include "hb/scalar.hpp"

namespace hb {

using QMatrix = std::vector<std::vector<Rational>>;
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(QMatrix m) { return row_reduce(m).size(); }

inline std::size_t rank_mod(ModMatrix m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    std::uint64_t inv = mod_inv(m[r][c] % p, p);
    for (auto& x : m[r]) x = static_cast<std::uint64_t>((unsigned __int128)(x % p) * inv % p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = m[i][c] % p;
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = (m[i][j] % p + p - static_cast<std::uint64_t>((unsigned __int128)f * m[r][j] % p)) % p;
    }
    ++r;
  }
  return r;
}

/// Solve A x = b over Q; columns of A are the unknowns.
inline std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  QMatrix m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  auto piv = row_reduce(m);
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols) return std::nullopt;
    x[piv[r]] = m[r][cols];
  }
  return x;
}

}  // namespace hb
