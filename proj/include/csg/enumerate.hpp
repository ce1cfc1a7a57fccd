#pragma once

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "csg/detail/parallel.hpp"
#include "csg/gapset.hpp"
#include "csg/semigroup.hpp"

namespace csg {

struct EnumStats {
  std::size_t visited = 0;        // distinct semigroups expanded
  std::size_t frontier_peak = 0;  // largest pending frontier
  std::size_t emitted = 0;        // results before deduplication
};

struct EnumResult {
  Point target;
  MatrixOrder order;
  std::vector<CSemigroup> semigroups;  // sorted by (genus, gaps)
  EnumStats stats;
};

namespace detail {

inline void check_enumeration_input(const Cone& cone, const MatrixOrder& order, const Point& f) {
  if (f.dim() != cone.dim()) throw std::invalid_argument("Frobenius target dimension does not match cone");
  if (f.is_zero()) throw Error("Frobenius target must be nonzero");
  if (!cone.contains(f)) throw Error("point " + f.str() + " is not in the cone");
  cone.check_finite_segments(order);
}

inline void sort_results(std::vector<CSemigroup>& v) {
  std::sort(v.begin(), v.end(), [](const CSemigroup& a, const CSemigroup& b) {
    if (a.genus() != b.genus()) return a.genus() < b.genus();
    return a.gaps() < b.gaps();
  });
}

/// Breadth-first search by genus over every C-semigroup whose gaps are all
/// ⪯ bound, moving from S to S ∖ {s} for minimal generators s ⪯ bound. Each
/// such semigroup is reached by removing its gaps in increasing order, each
/// being a minimal generator at its turn.
template <typename Visit>
EnumStats search_below(const ConePtr& cone, const MatrixOrder& order, const Point& bound, unsigned jobs,
                       Visit&& visit) {
  EnumStats stats;
  std::unordered_set<std::vector<Point>, PointListHash> seen;
  std::vector<CSemigroup> layer{CSemigroup::whole_cone(cone)};
  seen.insert(layer.front().gaps());
  while (!layer.empty()) {
    stats.frontier_peak = std::max(stats.frontier_peak, layer.size());
    stats.visited += layer.size();
    auto expansions = parallel_map(layer, jobs, [&](const CSemigroup& s) {
      std::vector<std::vector<Point>> next_gaps;
      for (const auto& g : s.minimal_generators()) {
        if (!order.less_equal(g, bound)) continue;
        auto gaps = s.gaps();
        gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), g), g);
        next_gaps.push_back(std::move(gaps));
      }
      return next_gaps;
    });
    for (const auto& s : layer) visit(s);
    std::vector<CSemigroup> next;
    for (auto& group : expansions) {
      for (auto& gaps : group) {
        if (!seen.insert(gaps).second) continue;
        next.push_back(CSemigroup::from_trusted_gaps(cone, std::move(gaps)));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const CSemigroup& a, const CSemigroup& b) { return a.gaps() < b.gaps(); });
    layer = std::move(next);
  }
  return stats;
}

}  // namespace detail

/// Every C-semigroup whose Frobenius vector is exactly `f`.
inline EnumResult all_with_frobenius(const ConePtr& cone, const MatrixOrder& order, const Point& f,
                                     unsigned jobs = 1) {
  detail::check_enumeration_input(*cone, order, f);
  EnumResult result{f, order, {}, {}};
  result.stats = detail::search_below(cone, order, f, jobs, [&](const CSemigroup& s) {
    if (!s.gaps().empty() && order.max_of(s.gaps()) == f) result.semigroups.push_back(s);
  });
  result.stats.emitted = result.semigroups.size();
  detail::sort_results(result.semigroups);
  return result;
}

/// Every C-semigroup with a nonempty gap set and Frobenius vector ⪯ f, plus
/// C itself when `include_cone` is set.
inline EnumResult all_with_frobenius_upto(const ConePtr& cone, const MatrixOrder& order, const Point& f,
                                          bool include_cone = false, unsigned jobs = 1) {
  detail::check_enumeration_input(*cone, order, f);
  EnumResult result{f, order, {}, {}};
  result.stats = detail::search_below(cone, order, f, jobs, [&](const CSemigroup& s) {
    if (!s.gaps().empty() || include_cone) result.semigroups.push_back(s);
  });
  result.stats.emitted = result.semigroups.size();
  detail::sort_results(result.semigroups);
  return result;
}

/// Literal transcription of the worklist procedure with generator-set
/// states: a new state is skipped only when it is still pending, and a
/// result is recorded whenever the removed generator is `f` itself. Kept for
/// comparison against the breadth-first search above; `stats.emitted`
/// counts recordings including repeats.
inline EnumResult all_with_frobenius_paper_literal(const ConePtr& cone, const MatrixOrder& order,
                                                   const Point& f) {
  detail::check_enumeration_input(*cone, order, f);
  EnumResult result{f, order, {}, {}};
  struct State {
    CSemigroup semigroup;
    std::vector<Point> removable;
  };
  auto removable = [&](const CSemigroup& s) {
    std::vector<Point> out;
    for (const auto& g : s.minimal_generators()) {
      if (order.less_equal(g, f)) out.push_back(g);
    }
    return out;
  };
  std::deque<State> pending;
  std::unordered_map<std::vector<Point>, std::size_t, PointListHash> pending_count;
  std::unordered_set<std::vector<Point>, PointListHash> collected;

  auto root = CSemigroup::whole_cone(cone);
  pending.push_back({root, removable(root)});
  pending_count[root.minimal_generators()]++;
  while (!pending.empty()) {
    result.stats.frontier_peak = std::max(result.stats.frontier_peak, pending.size());
    State state = std::move(pending.front());
    ++result.stats.visited;
    for (const auto& s : state.removable) {
      auto next = remove_min_gen(state.semigroup, s);
      const auto& gens = next.minimal_generators();
      if (auto it = pending_count.find(gens); it != pending_count.end() && it->second > 0) continue;
      if (s == f) {
        ++result.stats.emitted;
        if (collected.insert(next.gaps()).second) result.semigroups.push_back(next);
      }
      auto next_removable = removable(next);
      if (!next_removable.empty()) {
        pending_count[gens]++;
        pending.push_back({std::move(next), std::move(next_removable)});
      }
    }
    pending_count[state.semigroup.minimal_generators()]--;
    pending.pop_front();
  }
  detail::sort_results(result.semigroups);
  return result;
}

}  // namespace csg
