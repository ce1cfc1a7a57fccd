#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "csg/cone.hpp"

namespace csg {

/// A finite set of nonzero cone points, canonically sorted. Candidate gap
/// sets are checked against this contract on construction.
class GapCandidateSet {
 public:
  GapCandidateSet(ConePtr cone, std::vector<Point> elems) : cone_(std::move(cone)) {
    if (!cone_) throw std::invalid_argument("null cone");
    for (const auto& x : elems) {
      if (x.dim() != cone_->dim()) throw std::invalid_argument("gap dimension does not match cone");
      if (x.is_zero()) throw Error("the origin cannot be a gap");
      if (!cone_->contains(x)) throw Error("point " + x.str() + " is not in the cone");
    }
    elems_ = canonical(std::move(elems));
  }

  const Cone& cone() const noexcept { return *cone_; }
  const ConePtr& cone_ptr() const noexcept { return cone_; }
  const std::vector<Point>& elems() const noexcept { return elems_; }
  bool contains(const Point& x) const { return sorted_contains(elems_, x); }

 private:
  ConePtr cone_;
  std::vector<Point> elems_;
};

/// D(X): every a ∈ C with n·a ∈ X for some n ≥ 1, lexicographically sorted.
inline std::vector<Point> d_closure(const GapCandidateSet& x_set) {
  std::vector<Point> out;
  for (const auto& x : x_set.elems()) {
    const auto g = x.content();
    for (Point::value_type n = 1; n <= g; ++n) {
      if (g % n != 0) continue;
      Point a = x;
      for (std::size_t i = 0; i < a.dim(); ++i) a[i] /= n;
      out.push_back(std::move(a));
    }
  }
  return canonical(std::move(out));
}

struct ComplementCheck {
  bool valid = false;
  /// On failure: x ∈ X and s ∈ C∖X with s ≤_C x and x − s ∉ X.
  std::optional<std::pair<Point, Point>> witness;
  std::size_t pairs_checked = 0;
};

/// Decides whether C∖X is a C-semigroup by the pairwise characterization:
/// X must equal D(X), and x − s ∈ X for every x ∈ X and s ∈ C∖X with s ≤_C x.
inline ComplementCheck is_complement_semigroup_direct(const GapCandidateSet& x_set) {
  ComplementCheck result;
  const auto& xs = x_set.elems();
  const auto dx = d_closure(x_set);
  if (dx.size() != xs.size()) {
    for (const auto& a : dx) {
      if (x_set.contains(a)) continue;
      // smallest multiple m·a in X; (m·a, a) violates the pair condition
      for (Point::value_type m = 2;; ++m) {
        Point ma = m * a;
        if (x_set.contains(ma)) {
          result.witness = std::make_pair(std::move(ma), a);
          return result;
        }
      }
    }
  }
  const Cone& cone = x_set.cone();
  for (const auto& x : xs) {
    for (const auto& s : cone.interval(x)) {
      if (x_set.contains(s)) continue;
      ++result.pairs_checked;
      if (!x_set.contains(x - s)) {
        result.witness = std::make_pair(x, s);
        return result;
      }
    }
  }
  result.valid = true;
  return result;
}

}  // namespace csg
