#pragma once

// Brute-force reference implementations for tests and debugging. Nothing
// here calls into the search, generator or validation code of the main
// path; only the value types (Point, Cone membership, MatrixOrder
// comparison, CSemigroup gap lookup) are shared.

#include <cstdint>
#include <vector>

#include "csg/cone.hpp"
#include "csg/order.hpp"
#include "csg/semigroup.hpp"

namespace csg::oracle {

class TooLarge : public Error {
 public:
  using Error::Error;
};

inline constexpr double kMaxBoxPoints = 2e5;
inline constexpr std::size_t kMaxSubsetBits = 20;

/// {x ∈ N^p : x ≤ upper componentwise}, with dense indexing.
class BoundedBox {
 public:
  explicit BoundedBox(Point upper) : upper_(std::move(upper)) {
    if (!upper_.is_nonnegative()) throw std::invalid_argument("box bound must be nonnegative");
    if (detail::box_size(upper_) > kMaxBoxPoints)
      throw TooLarge("box " + upper_.str() + " exceeds the oracle size limit");
    stride_.assign(upper_.dim(), 1);
    for (std::size_t i = upper_.dim(); i-- > 1;) stride_[i - 1] = stride_[i] * (upper_[i] + 1);
    size_ = upper_.dim() ? stride_[0] * (upper_[0] + 1) : 1;
  }

  const Point& upper() const noexcept { return upper_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(size_); }

  bool contains(const Point& x) const {
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (x[i] < 0 || x[i] > upper_[i]) return false;
    }
    return true;
  }

  std::size_t index(const Point& x) const {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) k += x[i] * stride_[i];
    return static_cast<std::size_t>(k);
  }

  /// All points in lexicographic order.
  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(size());
    detail::for_each_in_box(upper_, [&](const Point& x) { out.push_back(x); });
    return out;
  }

 private:
  Point upper_;
  std::vector<std::int64_t> stride_;
  std::int64_t size_ = 1;
};

/// reach[index(x)] is true iff x is a finite sum of gens, for every x in the box.
inline std::vector<bool> reachable(const std::vector<Point>& gens, const BoundedBox& box) {
  std::vector<bool> reach(box.size(), false);
  // lexicographic order visits x − g before x for nonnegative nonzero g
  for (const auto& x : box.points()) {
    if (x.is_zero()) {
      reach[box.index(x)] = true;
      continue;
    }
    for (const auto& g : gens) {
      Point y = x - g;
      if (box.contains(y) && reach[box.index(y)]) {
        reach[box.index(x)] = true;
        break;
      }
    }
  }
  return reach;
}

inline bool oracle_membership(const std::vector<Point>& gens, const Point& x, const BoundedBox& box) {
  if (!box.contains(x)) throw Error("query " + x.str() + " lies outside the oracle box");
  for (const auto& g : gens) {
    if (!g.is_nonnegative() || g.is_zero()) throw Error("oracle generators must be nonzero in N^p");
  }
  return reachable(gens, box)[box.index(x)];
}

/// Box large enough to contain every gap, every minimal generator and the
/// region below the ray elements of S.
inline BoundedBox box_for(const CSemigroup& s) {
  const std::size_t p = s.dim();
  Point upper = Point::zero(p);
  for (const auto& h : s.gaps()) {
    for (std::size_t i = 0; i < p; ++i) upper[i] = std::max(upper[i], h[i]);
  }
  // least semigroup element on each ray, found by scanning multiples
  Point ray_sum = Point::zero(p), ray_max = Point::zero(p);
  for (const auto& r : s.cone().rays()) {
    Point kr = r;
    while (s.is_gap(kr)) kr += r;
    ray_sum += kr;
    for (std::size_t i = 0; i < p; ++i) ray_max[i] = std::max(ray_max[i], kr[i]);
  }
  for (std::size_t i = 0; i < p; ++i) upper[i] = std::max(upper[i] + ray_max[i], ray_sum[i]);
  return BoundedBox(upper);
}

/// PF by definition: gaps x with x + s ∈ S for every nonzero s ∈ S. Only s
/// with x + s inside the gap bounding box can land on a gap.
inline std::vector<Point> oracle_pf(const CSemigroup& s) {
  if (s.gaps().empty()) return {};
  Point upper = Point::zero(s.dim());
  for (const auto& h : s.gaps()) {
    for (std::size_t i = 0; i < s.dim(); ++i) upper[i] = std::max(upper[i], h[i]);
  }
  BoundedBox box(upper);
  const auto pts = box.points();
  std::vector<Point> out;
  for (const auto& x : s.gaps()) {
    bool pf = true;
    for (const auto& e : pts) {
      if (e.is_zero() || !s.contains(e)) continue;
      if (!s.contains(x + e)) {
        pf = false;
        break;
      }
    }
    if (pf) out.push_back(x);
  }
  return out;
}

/// Minimal generators by definition: nonzero elements that are not the sum
/// of two nonzero elements.
inline std::vector<Point> oracle_mingens(const CSemigroup& s) {
  BoundedBox box = box_for(s);
  std::vector<Point> elems;
  for (const auto& x : box.points()) {
    if (!x.is_zero() && s.contains(x)) elems.push_back(x);
  }
  std::vector<Point> out;
  for (const auto& x : elems) {
    bool split = false;
    for (const auto& a : elems) {
      Point b = x - a;
      if (b.is_nonnegative() && !b.is_zero() && s.contains(b)) {
        split = true;
        break;
      }
    }
    if (!split) out.push_back(x);
  }
  return out;
}

/// Irreducible lattice points of the cone inside `box`.
inline std::vector<Point> oracle_hilbert_basis(const Cone& cone, const BoundedBox& box) {
  std::vector<Point> elems;
  for (const auto& x : box.points()) {
    if (!x.is_zero() && cone.contains(x)) elems.push_back(x);
  }
  std::vector<Point> out;
  for (const auto& x : elems) {
    bool split = false;
    for (const auto& a : elems) {
      Point b = x - a;
      if (!b.is_zero() && b.is_nonnegative() && cone.contains(b)) {
        split = true;
        break;
      }
    }
    if (!split) out.push_back(x);
  }
  return out;
}

/// C∖X is closed under addition iff no x ∈ X splits as a + b with a, b ∈ C∖X.
inline bool oracle_complement_closed(const Cone& cone, const std::vector<Point>& sorted_x) {
  for (const auto& x : sorted_x) {
    BoundedBox box(x);
    for (const auto& a : box.points()) {
      if (!cone.contains(a) || sorted_contains(sorted_x, a)) continue;
      Point b = x - a;
      if (cone.contains(b) && !sorted_contains(sorted_x, b)) return false;
    }
  }
  return true;
}

/// Gap sets of every C-semigroup with Frobenius vector f, by testing each
/// subset of {x ∈ C∖{0} : x ≺ f} together with f. `box` must contain every
/// cone point ⪯ f; points on its upper faces that are ⪯ f are rejected as a
/// sign the box may be too small.
inline std::vector<std::vector<Point>> oracle_enum_frobenius(const Cone& cone, const MatrixOrder& order,
                                                             const Point& f, const BoundedBox& box) {
  std::vector<Point> below;
  for (const auto& x : box.points()) {
    if (x.is_zero() || !cone.contains(x) || order.compare(x, f) >= 0) continue;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (x[i] == box.upper()[i]) throw TooLarge("oracle box may truncate {x <= F}; enlarge it");
    }
    below.push_back(x);
  }
  if (below.size() > kMaxSubsetBits)
    throw TooLarge(std::to_string(below.size()) + " candidate points exceed the subset limit");
  std::vector<std::vector<Point>> out;
  const std::uint64_t total = std::uint64_t{1} << below.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Point> x{f};
    for (std::size_t i = 0; i < below.size(); ++i) {
      if (mask >> i & 1U) x.push_back(below[i]);
    }
    x = canonical(std::move(x));
    if (oracle_complement_closed(cone, x)) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace csg::oracle
