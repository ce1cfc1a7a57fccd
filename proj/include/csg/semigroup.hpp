#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "csg/cone.hpp"
#include "csg/gap_check.hpp"
#include "csg/order.hpp"

namespace csg {

/// Raised when a proposed gap set does not leave a semigroup behind. The
/// witness satisfies x ∈ X, s ∈ C∖X, s ≤_C x and x − s ∉ X.
class InvalidGapSet : public Error {
 public:
  InvalidGapSet(Point x, Point s)
      : Error("not the gap set of a C-semigroup: " + x.str() + " - " + s.str() + " = " +
              (x - s).str() + " is neither a gap nor allowed in the semigroup"),
        x_(std::move(x)),
        s_(std::move(s)) {}
  const Point& x() const noexcept { return x_; }
  const Point& s() const noexcept { return s_; }

 private:
  Point x_, s_;
};

namespace detail {

/// Membership in the monoid generated by a finite set inside a pointed cone,
/// by memoized descent: x ∈ S iff x = 0 or x − g ∈ S for some generator g
/// with x − g ∈ C. Well founded because every generator has positive degree.
class GeneratedMonoid {
 public:
  GeneratedMonoid(const Cone& cone, std::vector<Point> gens) : cone_(cone), gens_(std::move(gens)) {}

  bool contains(const Point& x) {
    if (!cone_.contains(x)) return false;
    return descend(x);
  }

 private:
  bool descend(const Point& x) {
    if (x.is_zero()) return true;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : gens_) {
      Point y = x - g;
      if (cone_.contains(y) && descend(y)) {
        found = true;
        break;
      }
    }
    memo_.emplace(x, found);
    return found;
  }

  const Cone& cone_;
  std::vector<Point> gens_;
  std::unordered_map<Point, bool, PointHash> memo_;
};

/// Decides whether x + k·step ∈ S for some k ≥ 0, where step is the least
/// semigroup element on an extremal ray. Works in Z^p / Z·step: a class is
/// reachable iff it is a sum of generator classes; generators off the ray
/// strictly decrease the functional `phi` (sum of facet normals through the
/// ray), and on-ray classes reduce to residues of ray multipliers mod c.
class RayLocalization {
 public:
  RayLocalization(const Cone& cone, std::size_t ray, const Point& step, const std::vector<Point>& gens)
      : ray_(cone.rays()[ray]), step_(step) {
    for (const auto& f : cone.facets()) {
      if (dot64(f, ray_) == 0) tight_.push_back(f);
    }
    phi_ = Point::zero(cone.dim());
    for (const auto& f : tight_) phi_ += f;
    for (std::size_t j = 0; j < ray_.dim(); ++j) {
      if (ray_[j] > 0) {
        pivot_ = j;
        break;
      }
    }
    multiple_ = step_[pivot_] / ray_[pivot_];
    std::vector<Point::value_type> on_ray;
    for (const auto& g : gens) {
      if (dot64(phi_, g) > 0) {
        off_ray_.push_back(g);
      } else {
        on_ray.push_back(g[pivot_] / ray_[pivot_]);
      }
    }
    residue_.assign(static_cast<std::size_t>(multiple_), false);
    residue_[0] = true;
    std::vector<Point::value_type> stack{0};
    while (!stack.empty()) {
      auto r = stack.back();
      stack.pop_back();
      for (auto a : on_ray) {
        auto next = (r + a) % multiple_;
        if (!residue_[next]) {
          residue_[next] = true;
          stack.push_back(next);
        }
      }
    }
  }

  bool reaches(const Point& x) { return member(x); }

 private:
  bool in_projected_cone(const Point& y) const {
    return std::all_of(tight_.begin(), tight_.end(), [&](const Point& f) { return dot64(f, y) >= 0; });
  }

  Point representative(const Point& y) const {
    auto q = y[pivot_] / step_[pivot_];
    if (y[pivot_] % step_[pivot_] != 0 && y[pivot_] < 0) --q;
    return y - q * step_;
  }

  bool member(const Point& y) {
    if (!in_projected_cone(y)) return false;
    if (dot64(phi_, y) == 0) {
      auto m = y[pivot_] / ray_[pivot_];
      m %= multiple_;
      if (m < 0) m += multiple_;
      return residue_[static_cast<std::size_t>(m)];
    }
    Point key = representative(y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : off_ray_) {
      Point z = y - g;
      if (in_projected_cone(z) && member(z)) {
        found = true;
        break;
      }
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

  Point ray_, step_, phi_;
  std::vector<Point> tight_, off_ray_;
  std::size_t pivot_ = 0;
  Point::value_type multiple_ = 1;
  std::vector<bool> residue_;
  std::unordered_map<Point, bool, PointHash> memo_;
};

}  // namespace detail

/// An affine C-semigroup, stored canonically as its cone and its finite gap
/// set H(S) = C∖S. Immutable; the minimal generating set is computed on first
/// use and shared between copies.
class CSemigroup {
 public:
  /// Validates the pairwise complement condition and throws InvalidGapSet
  /// with a witness when it fails.
  static CSemigroup from_gaps(ConePtr cone, std::vector<Point> gaps) {
    GapCandidateSet candidate(std::move(cone), std::move(gaps));
    auto check = is_complement_semigroup_direct(candidate);
    if (!check.valid) throw InvalidGapSet(check.witness->first, check.witness->second);
    return CSemigroup(candidate.cone_ptr(), candidate.elems());
  }

  /// Builds S = ⟨gens⟩ over C = cone(gens) and computes H(S) exactly.
  static CSemigroup from_generators(std::vector<Point> gens) {
    if (gens.empty()) throw Error("at least one generator is required");
    for (const auto& g : gens) {
      if (g.is_zero()) throw Error("zero generator");
    }
    gens = canonical(std::move(gens));
    auto cone = make_cone(gens);
    detail::GeneratedMonoid monoid(*cone, gens);

    std::vector<Point> ray_elems;
    for (const auto& r : cone->rays()) {
      if (std::none_of(gens.begin(), gens.end(), [&](const Point& g) { return detail::primitive(g) == r; }))
        throw Error("not a C-semigroup: no generator on the extremal ray through " + r.str());
      for (Point::value_type k = 1;; ++k) {
        Point kr = k * r;
        if (monoid.contains(kr)) {
          ray_elems.push_back(std::move(kr));
          break;
        }
      }
    }

    const auto region = cone->region_below_rays(ray_elems);
    for (std::size_t i = 0; i < ray_elems.size(); ++i) {
      detail::RayLocalization local(*cone, i, ray_elems[i], gens);
      for (const auto& x : region) {
        if (!local.reaches(x))
          throw Error("not a C-semigroup: infinitely many gaps of the form " + x.str() + " + k" +
                      ray_elems[i].str());
      }
    }

    std::unordered_set<Point, PointHash> gap_set;
    std::vector<Point> work;
    for (const auto& x : region) {
      if (!monoid.contains(x)) {
        gap_set.insert(x);
        work.push_back(x);
      }
    }
    while (!work.empty()) {
      Point h = std::move(work.back());
      work.pop_back();
      for (const auto& r : ray_elems) {
        Point y = h + r;
        if (gap_set.contains(y) || monoid.contains(y)) continue;
        gap_set.insert(y);
        work.push_back(std::move(y));
      }
    }
    return CSemigroup(std::move(cone), canonical(std::vector<Point>(gap_set.begin(), gap_set.end())));
  }

  static CSemigroup whole_cone(ConePtr cone) { return CSemigroup(std::move(cone), {}); }

  /// No validation: the caller guarantees C∖gaps is a semigroup (for
  /// example gaps(S) ∪ {minimal generator}).
  static CSemigroup from_trusted_gaps(ConePtr cone, std::vector<Point> gaps) {
    return CSemigroup(std::move(cone), canonical(std::move(gaps)));
  }

  const Cone& cone() const noexcept { return *cone_; }
  const ConePtr& cone_ptr() const noexcept { return cone_; }
  std::size_t dim() const noexcept { return cone_->dim(); }
  const std::vector<Point>& gaps() const noexcept { return gaps_; }
  std::size_t genus() const noexcept { return gaps_.size(); }

  bool is_gap(const Point& x) const { return sorted_contains(gaps_, x); }
  bool contains(const Point& x) const { return cone_->contains(x) && !is_gap(x); }

  /// Least element of S on each extremal ray, aligned with cone().rays().
  const std::vector<Point>& ray_elements() const noexcept { return ray_elems_; }

  /// Unique minimal generating set, lexicographically sorted.
  const std::vector<Point>& minimal_generators() const {
    std::call_once(cache_->once, [this] { cache_->gens = compute_minimal_generators(); });
    return cache_->gens;
  }

  friend bool operator==(const CSemigroup& a, const CSemigroup& b) {
    return a.gaps_ == b.gaps_ && *a.cone_ == *b.cone_;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Point> gens;
  };

  CSemigroup(ConePtr cone, std::vector<Point> sorted_gaps)
      : cone_(std::move(cone)), gaps_(std::move(sorted_gaps)), cache_(std::make_shared<Cache>()) {
    for (const auto& r : cone_->rays()) {
      for (Point::value_type k = 1;; ++k) {
        Point kr = k * r;
        if (!is_gap(kr)) {
          ray_elems_.push_back(std::move(kr));
          break;
        }
      }
    }
  }

  // Any minimal generator m off the region below the ray elements has
  // m − r_i ∈ C for some i, and minimality forces m − r_i ∈ H(S) ∪ {0}.
  std::vector<Point> compute_minimal_generators() const {
    std::vector<Point> candidates;
    for (const auto& x : cone_->region_below_rays(ray_elems_)) {
      if (!x.is_zero() && !is_gap(x)) candidates.push_back(x);
    }
    for (const auto& r : ray_elems_) {
      candidates.push_back(r);
      for (const auto& h : gaps_) {
        Point y = h + r;
        if (!is_gap(y)) candidates.push_back(std::move(y));
      }
    }
    candidates = canonical(std::move(candidates));
    std::vector<Point> gens;
    for (const auto& x : candidates) {
      bool decomposable = false;
      for (const auto& a : cone_->interval(x)) {
        if (a.is_zero() || a == x || is_gap(a)) continue;
        if (!is_gap(x - a)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) gens.push_back(x);
    }
    return gens;
  }

  ConePtr cone_;
  std::vector<Point> gaps_;
  std::vector<Point> ray_elems_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Invariants

/// a ≤_S b, i.e. b − a ∈ S.
inline bool partial_leq(const CSemigroup& s, const Point& a, const Point& b) {
  require_same_dim(a, b);
  return s.contains(b - a);
}

/// Elements of `pts` that are maximal under ≤_S.
inline std::vector<Point> maximals(const CSemigroup& s, const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const auto& a : pts) {
    bool dominated = std::any_of(pts.begin(), pts.end(),
                                 [&](const Point& b) { return b != a && partial_leq(s, a, b); });
    if (!dominated) out.push_back(a);
  }
  return canonical(std::move(out));
}

inline std::size_t genus(const CSemigroup& s) { return s.genus(); }

inline bool membership(const CSemigroup& s, const Point& x) { return s.contains(x); }

inline const std::vector<Point>& minimal_generators(const CSemigroup& s) {
  return s.minimal_generators();
}

inline Point frobenius_vector(const CSemigroup& s, const MatrixOrder& order) {
  if (s.gaps().empty()) throw Error("Frobenius vector undefined for S = C");
  return order.max_of(s.gaps());
}

struct SmallElements {
  std::vector<Point> elements;  // N(S), increasing in the order
  std::size_t count() const noexcept { return elements.size(); }
};

/// N(S) = {x ∈ S : x ⪯ F(S)} and n(S) = |N(S)|.
inline SmallElements small_elements(const CSemigroup& s, const MatrixOrder& order) {
  const Point f = frobenius_vector(s, order);
  SmallElements out;
  for (auto& x : s.cone().enumerate_upto(order, f)) {
    if (s.contains(x)) out.elements.push_back(std::move(x));
  }
  return out;
}

/// I_S(n) = {s ∈ S : n − s ∈ C}.
inline std::vector<Point> interval_s(const CSemigroup& s, const Point& n) {
  auto pts = s.cone().interval(n);
  std::erase_if(pts, [&](const Point& x) { return s.is_gap(x); });
  return pts;
}

/// Ap(S, b) = {a ∈ S : a − b ∈ H(S)}.
inline std::vector<Point> apery(const CSemigroup& s, const Point& b) {
  if (b.is_zero() || !s.contains(b)) throw Error("Apery set needs b in S\\{0}, got " + b.str());
  std::vector<Point> out;
  for (const auto& h : s.gaps()) {
    Point a = h + b;
    if (s.contains(a)) out.push_back(std::move(a));
  }
  return canonical(std::move(out));
}

/// Gaps x with x + m ∈ S for every minimal generator m (hence for all of S∖{0}).
inline std::vector<Point> pseudo_frobenius(const CSemigroup& s) {
  const auto& gens = s.minimal_generators();
  std::vector<Point> out;
  for (const auto& x : s.gaps()) {
    if (std::all_of(gens.begin(), gens.end(), [&](const Point& m) { return s.contains(x + m); }))
      out.push_back(x);
  }
  return out;
}

inline std::size_t type(const CSemigroup& s) { return pseudo_frobenius(s).size(); }

inline std::vector<Point> special_gaps(const CSemigroup& s) {
  auto pf = pseudo_frobenius(s);
  std::erase_if(pf, [&](const Point& x) { return !s.contains(2 * x); });
  return pf;
}

inline std::vector<Point> fundamental_gaps(const CSemigroup& s) {
  std::vector<Point> out;
  for (const auto& x : s.gaps()) {
    if (s.contains(2 * x) && s.contains(3 * x)) out.push_back(x);
  }
  return out;
}

inline Point multiplicity(const CSemigroup& s, const MatrixOrder& order) {
  return order.min_of(s.minimal_generators());
}

enum class Symmetry { symmetric, pseudo_symmetric, neither };

inline std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::pseudo_symmetric: return "pseudo-symmetric";
    case Symmetry::neither: return "neither";
  }
  return "neither";
}

inline bool all_even(const Point& x) {
  return std::all_of(x.begin(), x.end(), [](Point::value_type c) { return c % 2 == 0; });
}

/// Classification by genus: symmetric iff g = #I_S(F), pseudo-symmetric iff
/// g = 1 + #I_S(F) and F/2 is integral. The class does not depend on the order.
inline Symmetry classify_symmetry(const CSemigroup& s, const MatrixOrder& order) {
  const Point f = frobenius_vector(s, order);
  const auto count = interval_s(s, f).size();
  if (s.genus() == count) return Symmetry::symmetric;
  if (s.genus() == count + 1 && all_even(f)) return Symmetry::pseudo_symmetric;
  return Symmetry::neither;
}

inline Symmetry classify_symmetry(const CSemigroup& s) {
  return classify_symmetry(s, MatrixOrder::graded_lex(s.dim()));
}

/// Classification straight from the definition PF = {F} / {F, F/2}.
inline Symmetry classify_by_pseudo_frobenius(const CSemigroup& s) {
  if (s.gaps().empty()) throw Error("symmetry undefined for S = C");
  const auto pf = pseudo_frobenius(s);
  if (pf.size() == 1) return Symmetry::symmetric;
  if (pf.size() == 2 && (pf[1] == 2 * pf[0] || pf[0] == 2 * pf[1])) return Symmetry::pseudo_symmetric;
  return Symmetry::neither;
}

inline bool is_irreducible(const CSemigroup& s) {
  return !s.gaps().empty() && classify_by_pseudo_frobenius(s) != Symmetry::neither;
}

/// Generalized Frobenius number #I_S(F(S)) + g(S).
inline std::size_t frobenius_number(const CSemigroup& s, const MatrixOrder& order) {
  return interval_s(s, frobenius_vector(s, order)).size() + s.genus();
}

inline std::size_t frobenius_number(const CSemigroup& s) {
  return frobenius_number(s, MatrixOrder::graded_lex(s.dim()));
}

inline std::vector<Point> apery_maximals(const CSemigroup& s, const Point& b) {
  return maximals(s, apery(s, b));
}

struct InvariantReport {
  std::size_t genus = 0;
  std::optional<Point> frobenius_vector;
  std::optional<std::size_t> frobenius_number;
  std::size_t type = 0;
  std::optional<std::size_t> n;
  std::vector<Point> minimal_generators;
  std::vector<Point> pf, sg, fg;
  std::optional<Symmetry> symmetry;  // empty for S = C
};

inline InvariantReport invariants(const CSemigroup& s, const MatrixOrder& order) {
  InvariantReport r;
  r.genus = s.genus();
  r.minimal_generators = s.minimal_generators();
  r.pf = pseudo_frobenius(s);
  r.type = r.pf.size();
  r.sg = special_gaps(s);
  r.fg = fundamental_gaps(s);
  if (!s.gaps().empty()) {
    r.frobenius_vector = frobenius_vector(s, order);
    r.frobenius_number = frobenius_number(s, order);
    r.symmetry = classify_symmetry(s, order);
    bool finite = true;
    try {
      s.cone().check_finite_segments(order);
    } catch (const Error&) {
      finite = false;
    }
    if (finite) r.n = small_elements(s, order).count();
  }
  return r;
}

}  // namespace csg
