#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csg {

/// Base class for every domain failure raised by the library (invalid gap
/// sets, points outside the cone, undefined invariants). Programming errors
/// such as dimension mismatches use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer vector in Z^p. Semigroup and cone elements are nonnegative; a
/// difference of two elements may have negative coordinates.
class Point {
 public:
  using value_type = std::int64_t;

  Point() = default;
  Point(std::initializer_list<value_type> coords) : coords_(coords) {}
  explicit Point(std::vector<value_type> coords) : coords_(std::move(coords)) {}

  static Point zero(std::size_t dim) { return Point(std::vector<value_type>(dim, 0)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  std::span<const value_type> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
  }
  bool is_nonnegative() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c >= 0; });
  }

  /// Greatest common divisor of the absolute coordinates (0 for the origin).
  value_type content() const noexcept {
    value_type g = 0;
    for (auto c : coords_) g = std::gcd(g, c < 0 ? -c : c);
    return g;
  }

  Point& operator+=(const Point& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(Point a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Point operator*(value_type k, Point a) {
    for (auto& c : a.coords_) c *= k;
    return a;
  }

  /// Lexicographic on coordinates; this is the canonical order for sets.
  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    os << '(';
    for (std::size_t i = 0; i < p.coords_.size(); ++i) {
      if (i) os << ", ";
      os << p.coords_[i];
    }
    return os << ')';
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  void check_dim(const Point& o) const {
    if (o.dim() != dim())
      throw std::invalid_argument("dimension mismatch: " + std::to_string(dim()) + " vs " +
                                  std::to_string(o.dim()));
  }

  std::vector<value_type> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : p) {
      h ^= std::hash<Point::value_type>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Hash for canonical (sorted) point lists, used as the dedup key for
/// semigroups identified by their gap sets.
struct PointListHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = v.size();
    PointHash ph;
    for (const auto& p : v) h ^= ph(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

/// Sorts lexicographically and removes duplicates.
inline std::vector<Point> canonical(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Membership in a lexicographically sorted point list.
inline bool sorted_contains(std::span<const Point> sorted, const Point& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline bool is_subset(std::span<const Point> sorted_sub, std::span<const Point> sorted_super) {
  return std::includes(sorted_super.begin(), sorted_super.end(), sorted_sub.begin(),
                       sorted_sub.end());
}

}  // namespace csg
