#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "csg/detail/exact.hpp"
#include "csg/order.hpp"
#include "csg/point.hpp"

namespace csg {

namespace detail {

/// Calls fn(x) for every x with 0 ≤ x ≤ upper componentwise, in lexicographic order.
template <typename Fn>
void for_each_in_box(const Point& upper, Fn&& fn) {
  const std::size_t p = upper.dim();
  for (std::size_t i = 0; i < p; ++i) {
    if (upper[i] < 0) return;
  }
  Point x = Point::zero(p);
  while (true) {
    fn(static_cast<const Point&>(x));
    std::size_t i = p;
    while (i > 0) {
      --i;
      if (x[i] < upper[i]) {
        ++x[i];
        break;
      }
      x[i] = 0;
      if (i == 0) return;
    }
    if (p == 0) return;
  }
}

inline double box_size(const Point& upper) {
  double n = 1;
  for (auto c : upper) n *= static_cast<double>(c + 1);
  return n;
}

inline constexpr double kMaxBoxPoints = 5e7;

inline Point primitive(Point v) {
  auto g = v.content();
  if (g > 1) {
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= g;
  }
  return v;
}

/// Cofactor normal of p−1 vectors in Z^p (generalized cross product).
inline Point cofactor_normal(const std::vector<Point>& vs, std::size_t p) {
  Point n = Point::zero(p);
  for (std::size_t col = 0; col < p; ++col) {
    BigMatrix minor;
    for (const auto& v : vs) {
      std::vector<big_int> row;
      for (std::size_t j = 0; j < p; ++j) {
        if (j != col) row.emplace_back(v[j]);
      }
      minor.push_back(std::move(row));
    }
    big_int d = determinant(std::move(minor));
    if (col % 2 == 1) d = -d;
    n[col] = narrow(d);
  }
  return n;
}

inline std::int64_t dot64(const Point& a, const Point& b) {
  return narrow(exact_dot(a.coords(), b));
}

}  // namespace detail

/// Pointed, full-dimensional rational cone in the nonnegative orthant,
/// identified with its lattice points. Facets and the Hilbert basis are
/// computed once at construction; the object is immutable afterwards.
class Cone {
 public:
  /// Builds the cone generated by `generators`. Generators need not be
  /// extremal; redundant ones are dropped and the extremal rays are kept as
  /// primitive vectors.
  static Cone from_rays(std::vector<Point> generators) {
    if (generators.empty()) throw Error("a cone needs at least one generator");
    const std::size_t p = generators.front().dim();
    if (p == 0) throw Error("cone dimension must be at least 1");
    for (auto& g : generators) {
      if (g.dim() != p) throw std::invalid_argument("cone generators have inconsistent dimensions");
      if (g.is_zero()) throw Error("zero vector among cone generators");
      g = detail::primitive(std::move(g));
    }
    generators = canonical(std::move(generators));
    for (const auto& g : generators) {
      if (std::binary_search(generators.begin(), generators.end(), -g))
        throw Error("cone is not pointed: it contains the line through " + g.str());
    }
    for (const auto& g : generators) {
      if (!g.is_nonnegative()) throw Error("cone generators must lie in N^p, got " + g.str());
    }
    if (detail::rank(generators) != p) throw Error("cone is not full-dimensional");

    Cone c;
    c.dim_ = p;
    c.facets_ = compute_facets(generators, p);
    if (detail::rank(c.facets_) != p) throw Error("cone is not pointed");
    for (const auto& g : generators) {
      std::vector<Point> tight;
      for (const auto& f : c.facets_) {
        if (detail::dot64(f, g) == 0) tight.push_back(f);
      }
      if (detail::rank(tight) + 1 == p) c.rays_.push_back(g);
    }
    c.hilbert_ = c.compute_hilbert_basis();
    return c;
  }

  std::size_t dim() const noexcept { return dim_; }
  /// Primitive extremal ray generators, lexicographically sorted.
  const std::vector<Point>& rays() const noexcept { return rays_; }
  /// Primitive inward facet normals: x ∈ C iff n·x ≥ 0 for all of them.
  const std::vector<Point>& facets() const noexcept { return facets_; }
  /// Minimal generating set of the monoid of lattice points, lexicographically sorted.
  const std::vector<Point>& hilbert_basis() const noexcept { return hilbert_; }

  bool contains(const Point& x) const {
    if (x.dim() != dim_) throw std::invalid_argument("point dimension does not match cone");
    for (const auto& f : facets_) {
      if (detail::exact_dot(f.coords(), x) < 0) return false;
    }
    return true;
  }

  /// Index of the extremal ray containing x (x a positive multiple of it).
  std::optional<std::size_t> ray_index(const Point& x) const {
    if (x.is_zero() || x.dim() != dim_) return std::nullopt;
    const Point prim = detail::primitive(x);
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (rays_[i] == prim) return i;
    }
    return std::nullopt;
  }

  /// {x ∈ C : f − x ∈ C}, lexicographically sorted; includes 0 and f.
  std::vector<Point> interval(const Point& f) const {
    if (!contains(f)) throw Error("point " + f.str() + " is not in the cone");
    check_box(f);
    std::vector<Point> out;
    detail::for_each_in_box(f, [&](const Point& x) {
      if (contains(x) && contains(f - x)) out.push_back(x);
    });
    return out;
  }

  /// {x ∈ C : x − r_i ∉ C for every i}, for one nonzero element r_i on each
  /// extremal ray. The kept region is ≤_C-downward closed, so a search from 0
  /// along Hilbert basis steps reaches all of it.
  std::vector<Point> region_below_rays(std::span<const Point> ray_elems) const {
    if (ray_elems.size() != rays_.size())
      throw Error("expected one element per extremal ray (" + std::to_string(rays_.size()) + ")");
    std::vector<bool> seen(rays_.size(), false);
    for (const auto& r : ray_elems) {
      auto idx = ray_index(r);
      if (!idx) throw Error("point " + r.str() + " is not on an extremal ray");
      if (seen[*idx]) throw Error("two elements given for the ray through " + rays_[*idx].str());
      seen[*idx] = true;
    }
    auto kept = [&](const Point& x) {
      return std::none_of(ray_elems.begin(), ray_elems.end(),
                          [&](const Point& r) { return contains(x - r); });
    };
    return search_from_origin(kept);
  }

  /// Ensures the first row of the order is strictly positive on every
  /// extremal ray, which makes {x ∈ C : x ⪯ F} finite. Throws otherwise.
  void check_finite_segments(const MatrixOrder& order) const {
    if (order.dim() != dim_) throw std::invalid_argument("order dimension does not match cone");
    for (const auto& r : rays_) {
      if (detail::exact_dot(order.row(0), r) <= 0)
        throw Error("order has infinite initial segments on this cone: first row is non-positive on ray " +
                    r.str());
    }
  }

  /// All x ∈ C with x ⪯ F, in increasing order.
  std::vector<Point> enumerate_upto(const MatrixOrder& order, const Point& bound) const {
    check_finite_segments(order);
    if (!contains(bound)) throw Error("point " + bound.str() + " is not in the cone");
    const auto first = order.row(0);
    const auto limit = detail::dot_or_throw(first, bound);
    auto pts = search_from_origin([&](const Point& x) { return detail::dot_or_throw(first, x) <= limit; });
    std::erase_if(pts, [&](const Point& x) { return order.compare(x, bound) > 0; });
    order.sort(pts);
    return pts;
  }

  friend bool operator==(const Cone& a, const Cone& b) { return a.rays_ == b.rays_; }

 private:
  Cone() = default;

  static std::vector<Point> compute_facets(const std::vector<Point>& gens, std::size_t p) {
    std::vector<Point> facets;
    const std::size_t k = p - 1;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    auto consider = [&] {
      std::vector<Point> vs;
      for (auto i : idx) vs.push_back(gens[i]);
      Point n = detail::cofactor_normal(vs, p);
      if (n.is_zero()) return;
      n = detail::primitive(std::move(n));
      bool has_pos = false, has_neg = false;
      for (const auto& g : gens) {
        auto d = detail::dot64(n, g);
        has_pos |= d > 0;
        has_neg |= d < 0;
      }
      if (has_pos && has_neg) return;
      if (has_neg) n = -n;
      facets.push_back(std::move(n));
    };
    if (k > gens.size()) return facets;
    while (true) {
      consider();
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == gens.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return canonical(std::move(facets));
  }

  // Every Hilbert basis element is a ray or lies in the half-open
  // parallelepiped of p linearly independent rays, hence below the sum of
  // the p largest ray coordinates on each axis.
  std::vector<Point> compute_hilbert_basis() const {
    Point upper = Point::zero(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::vector<Point::value_type> col;
      for (const auto& r : rays_) col.push_back(r[j]);
      std::sort(col.rbegin(), col.rend());
      for (std::size_t i = 0; i < std::min(dim_, col.size()); ++i) upper[j] += col[i];
    }
    check_box(upper);
    std::vector<Point> candidates;
    detail::for_each_in_box(upper, [&](const Point& x) {
      if (!x.is_zero() && contains(x)) candidates.push_back(x);
    });
    auto degree = [](const Point& x) {
      Point::value_type s = 0;
      for (auto c : x) s += c;
      return s;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Point& a, const Point& b) { return degree(a) < degree(b); });
    std::vector<Point> basis;
    for (const auto& x : candidates) {
      bool reducible = std::any_of(basis.begin(), basis.end(),
                                   [&](const Point& h) { return contains(x - h); });
      if (!reducible) basis.push_back(x);
    }
    return canonical(std::move(basis));
  }

  template <typename Keep>
  std::vector<Point> search_from_origin(Keep&& keep) const {
    std::unordered_set<Point, PointHash> seen;
    std::deque<Point> queue;
    const Point origin = Point::zero(dim_);
    if (!keep(origin)) return {};
    seen.insert(origin);
    queue.push_back(origin);
    while (!queue.empty()) {
      Point x = std::move(queue.front());
      queue.pop_front();
      for (const auto& h : hilbert_) {
        Point y = x + h;
        if (seen.contains(y) || !keep(y)) continue;
        seen.insert(y);
        queue.push_back(std::move(y));
      }
    }
    return canonical(std::vector<Point>(seen.begin(), seen.end()));
  }

  static void check_box(const Point& upper) {
    if (detail::box_size(upper) > detail::kMaxBoxPoints)
      throw Error("bounding box " + upper.str() + " is too large to enumerate");
  }

  std::size_t dim_ = 0;
  std::vector<Point> rays_;
  std::vector<Point> facets_;
  std::vector<Point> hilbert_;
};

using ConePtr = std::shared_ptr<const Cone>;

inline ConePtr make_cone(std::vector<Point> generators) {
  return std::make_shared<const Cone>(Cone::from_rays(std::move(generators)));
}

/// x ≤_C y, i.e. y − x ∈ C.
inline bool partial_leq(const Cone& cone, const Point& x, const Point& y) {
  require_same_dim(x, y);
  return cone.contains(y - x);
}

}  // namespace csg
