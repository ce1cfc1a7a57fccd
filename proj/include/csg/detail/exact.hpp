#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "csg/point.hpp"

namespace csg::detail {

__extension__ typedef __int128 wide_int;
using big_int = boost::multiprecision::cpp_int;

/// row · x in 128-bit arithmetic, or nullopt if any step overflows.
inline std::optional<wide_int> checked_dot(std::span<const std::int64_t> row, const Point& x) {
  wide_int acc = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    wide_int term;
    if (__builtin_mul_overflow(static_cast<wide_int>(row[j]), static_cast<wide_int>(x[j]), &term))
      return std::nullopt;
    if (__builtin_add_overflow(acc, term, &acc)) return std::nullopt;
  }
  return acc;
}

inline big_int exact_dot(std::span<const std::int64_t> row, const Point& x) {
  big_int acc = 0;
  for (std::size_t j = 0; j < row.size(); ++j) acc += big_int(row[j]) * big_int(x[j]);
  return acc;
}

/// Sign of row·a − row·b, exact for all int64 inputs.
inline int compare_dots(std::span<const std::int64_t> row, const Point& a, const Point& b) {
  auto va = checked_dot(row, a);
  auto vb = checked_dot(row, b);
  if (va && vb) return (*va < *vb) ? -1 : (*va > *vb ? 1 : 0);
  big_int ea = exact_dot(row, a), eb = exact_dot(row, b);
  return ea < eb ? -1 : (ea > eb ? 1 : 0);
}

/// row · x where the caller needs the value itself; throws on overflow.
inline wide_int dot_or_throw(std::span<const std::int64_t> row, const Point& x) {
  auto v = checked_dot(row, x);
  if (!v) throw std::overflow_error("integer overflow evaluating a linear functional");
  return *v;
}

using BigMatrix = std::vector<std::vector<big_int>>;

inline BigMatrix to_big(const std::vector<std::vector<std::int64_t>>& m) {
  BigMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

/// Fraction-free (Bareiss) determinant of a square matrix.
inline big_int determinant(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  big_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Rank of a list of integer row vectors (all of equal length).
inline std::size_t rank(const std::vector<Point>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().dim();
  BigMatrix a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      big_int f = a[i][c], g = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
    }
    ++r;
  }
  return r;
}

inline std::int64_t narrow(const big_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace csg::detail
