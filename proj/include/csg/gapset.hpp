#pragma once

#include <optional>
#include <vector>

#include "csg/gap_check.hpp"
#include "csg/semigroup.hpp"

namespace csg {

/// S ∖ {x} for a minimal generator x; the result has gaps H(S) ∪ {x}.
inline CSemigroup remove_min_gen(const CSemigroup& s, const Point& x) {
  if (!sorted_contains(s.minimal_generators(), x))
    throw Error("point " + x.str() + " is not a minimal generator");
  auto gaps = s.gaps();
  gaps.push_back(x);
  return CSemigroup::from_trusted_gaps(s.cone_ptr(), std::move(gaps));
}

/// S ∪ {x} for a special gap x.
inline CSemigroup add_special_gap(const CSemigroup& s, const Point& x) {
  if (!sorted_contains(special_gaps(s), x)) throw Error("point " + x.str() + " is not a special gap");
  auto gaps = s.gaps();
  std::erase(gaps, x);
  return CSemigroup::from_trusted_gaps(s.cone_ptr(), std::move(gaps));
}

struct ComplementGenerators {
  /// Minimal generators of C∖X, or empty when C∖X is not a C-semigroup.
  std::optional<std::vector<Point>> generators;
  /// Generating set after each single removal, in removal order.
  std::vector<std::vector<Point>> trace;
};

/// Incremental check that C∖X is a C-semigroup: starting from the Hilbert
/// basis, remove the elements of X in increasing order, each of which must
/// be a minimal generator at the moment it is removed. Stops early once the
/// remaining elements are all current minimal generators.
inline ComplementGenerators complement_semigroup_mingens(const GapCandidateSet& x_set,
                                                         const MatrixOrder& order) {
  ComplementGenerators out;
  auto xs = x_set.elems();
  if (d_closure(x_set).size() != xs.size()) return out;
  order.sort(xs);

  CSemigroup current = CSemigroup::whole_cone(x_set.cone_ptr());
  auto all_generators = [&](std::size_t from) {
    const auto& gens = current.minimal_generators();
    for (std::size_t j = from; j < xs.size(); ++j) {
      if (!sorted_contains(gens, xs[j])) return false;
    }
    return true;
  };
  auto finish = [&](std::size_t from) {
    auto gaps = current.gaps();
    gaps.insert(gaps.end(), xs.begin() + static_cast<std::ptrdiff_t>(from), xs.end());
    out.generators = CSemigroup::from_trusted_gaps(x_set.cone_ptr(), std::move(gaps)).minimal_generators();
    return out;
  };

  if (all_generators(0)) return finish(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!sorted_contains(current.minimal_generators(), xs[i])) return out;
    current = remove_min_gen(current, xs[i]);
    out.trace.push_back(current.minimal_generators());
    if (all_generators(i + 1)) return finish(i + 1);
  }
  out.generators = current.minimal_generators();
  return out;
}

/// SG(S) ⊆ G, i.e. S is maximal among C-semigroups whose gap sets contain G.
inline bool is_maximal_wrt(const CSemigroup& s, const std::vector<Point>& g) {
  for (const auto& x : g) {
    if (!s.is_gap(x)) throw Error("point " + x.str() + " is not a gap");
  }
  const auto sorted_g = canonical(g);
  return is_subset(special_gaps(s), sorted_g);
}

/// The largest C-semigroup having X among its gaps, C∖D(X), when it exists.
inline std::optional<CSemigroup> determines_gapset(const GapCandidateSet& x_set) {
  GapCandidateSet closed(x_set.cone_ptr(), d_closure(x_set));
  if (!is_complement_semigroup_direct(closed).valid) return std::nullopt;
  return CSemigroup::from_trusted_gaps(closed.cone_ptr(), closed.elems());
}

struct FundamentalGapReport {
  std::vector<Point> fg, sg, max_fg;
  bool fg_determines_gaps = false;       // D(FG(S)) = H(S)
  bool sg_is_max_fg = false;             // SG(S) = max_{≤S} FG(S)
  bool irreducible = false;
  bool irreducible_iff_single_max = false;  // irreducible ⇔ |max FG| = 1
};

inline FundamentalGapReport fg_structure_checks(const CSemigroup& s) {
  FundamentalGapReport r;
  r.fg = fundamental_gaps(s);
  r.sg = special_gaps(s);
  r.max_fg = maximals(s, r.fg);
  r.fg_determines_gaps = d_closure(GapCandidateSet(s.cone_ptr(), r.fg)) == s.gaps();
  r.sg_is_max_fg = r.sg == r.max_fg;
  r.irreducible = is_irreducible(s);
  r.irreducible_iff_single_max = r.irreducible == (r.max_fg.size() == 1);
  return r;
}

}  // namespace csg
