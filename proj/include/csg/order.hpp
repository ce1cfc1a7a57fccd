#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csg/detail/exact.hpp"
#include "csg/point.hpp"

namespace csg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct OrderValidation {
  bool valid = false;
  std::string diagnostics;
  std::optional<std::size_t> column;  // offending column, when the sign rule fails
};

/// Checks that `m` defines a monomial order on N^p: nonsingular, and the
/// topmost nonzero entry of every column is positive (so 0 ⪯ c on N^p).
/// Throws std::invalid_argument when `m` is not square.
inline OrderValidation validate_order(const IntMatrix& m) {
  const std::size_t p = m.size();
  if (p == 0) throw std::invalid_argument("order matrix is empty");
  for (const auto& row : m) {
    if (row.size() != p) throw std::invalid_argument("order matrix must be square");
  }
  for (std::size_t col = 0; col < p; ++col) {
    for (std::size_t row = 0; row < p; ++row) {
      if (m[row][col] == 0) continue;
      if (m[row][col] < 0) {
        return {false,
                "column " + std::to_string(col + 1) + " has negative topmost nonzero entry in row " +
                    std::to_string(row + 1),
                col};
      }
      break;
    }
  }
  if (detail::determinant(detail::to_big(m)) == 0) return {false, "matrix is singular", std::nullopt};
  return {true, "ok", std::nullopt};
}

/// Total order on Z^p given by a nonsingular integer matrix: points are
/// compared by the first row whose values differ.
class MatrixOrder {
 public:
  /// Validates and throws csg::Error with the diagnostics on failure.
  static MatrixOrder from_rows(IntMatrix rows) {
    auto v = validate_order(rows);
    if (!v.valid) throw Error("invalid order matrix: " + v.diagnostics);
    return MatrixOrder(std::move(rows));
  }

  /// Degree first, ties broken lexicographically (row 1 all ones, then e_1..e_{p-1}).
  static MatrixOrder graded_lex(std::size_t p) {
    IntMatrix m(p, std::vector<std::int64_t>(p, 0));
    for (std::size_t j = 0; j < p; ++j) m[0][j] = 1;
    for (std::size_t i = 1; i < p; ++i) m[i][i - 1] = 1;
    return MatrixOrder(std::move(m));
  }

  static MatrixOrder lex(std::size_t p) {
    IntMatrix m(p, std::vector<std::int64_t>(p, 0));
    for (std::size_t i = 0; i < p; ++i) m[i][i] = 1;
    return MatrixOrder(std::move(m));
  }

  std::size_t dim() const noexcept { return rows_.size(); }
  const IntMatrix& rows() const noexcept { return rows_; }
  std::span<const std::int64_t> row(std::size_t i) const { return rows_[i]; }

  std::strong_ordering compare(const Point& a, const Point& b) const {
    check(a);
    check(b);
    for (const auto& r : rows_) {
      int s = detail::compare_dots(r, a, b);
      if (s < 0) return std::strong_ordering::less;
      if (s > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// x against f/2, evaluated as 2x against f (the order is linear).
  std::strong_ordering compare_half(const Point& x, const Point& f) const {
    return compare(2 * x, f);
  }

  bool less(const Point& a, const Point& b) const { return compare(a, b) < 0; }
  bool less_equal(const Point& a, const Point& b) const { return compare(a, b) <= 0; }

  void sort(std::vector<Point>& pts) const {
    std::sort(pts.begin(), pts.end(), [this](const Point& a, const Point& b) { return less(a, b); });
  }

  const Point& max_of(std::span<const Point> pts) const {
    if (pts.empty()) throw std::invalid_argument("max of an empty set");
    return *std::max_element(pts.begin(), pts.end(),
                             [this](const Point& a, const Point& b) { return less(a, b); });
  }
  const Point& min_of(std::span<const Point> pts) const {
    if (pts.empty()) throw std::invalid_argument("min of an empty set");
    return *std::min_element(pts.begin(), pts.end(),
                             [this](const Point& a, const Point& b) { return less(a, b); });
  }

  friend bool operator==(const MatrixOrder&, const MatrixOrder&) = default;

 private:
  explicit MatrixOrder(IntMatrix rows) : rows_(std::move(rows)) {}

  void check(const Point& a) const {
    if (a.dim() != rows_.size())
      throw std::invalid_argument("point dimension " + std::to_string(a.dim()) +
                                  " does not match order dimension " + std::to_string(rows_.size()));
  }

  IntMatrix rows_;
};

inline std::strong_ordering compare(const MatrixOrder& order, const Point& a, const Point& b) {
  return order.compare(a, b);
}

inline std::strong_ordering compare_half(const MatrixOrder& order, const Point& x, const Point& f) {
  return order.compare_half(x, f);
}

/// x ≤_L y for an explicit finite set L (y − x ∈ L).
inline bool partial_leq(std::span<const Point> finite_set, const Point& x, const Point& y) {
  require_same_dim(x, y);
  const Point d = y - x;
  return std::find(finite_set.begin(), finite_set.end(), d) != finite_set.end();
}

}  // namespace csg
