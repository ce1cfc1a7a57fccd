#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csg/detail/parallel.hpp"
#include "csg/gapset.hpp"
#include "csg/semigroup.hpp"

namespace csg {

struct IntervalSplit {
  std::vector<Point> lower;  // I1(f): 0 ≠ x ⪯ f/2
  std::vector<Point> upper;  // I2(f): x ≻ f/2
};

/// Partitions I_C(f) ∖ {0} by comparing each point with f/2.
inline IntervalSplit split_interval(const Cone& cone, const MatrixOrder& order, const Point& f) {
  if (f.is_zero()) throw Error("f must be nonzero");
  if (!cone.contains(f)) throw Error("point " + f.str() + " is not in the cone");
  IntervalSplit split;
  for (auto& x : cone.interval(f)) {
    if (x.is_zero()) continue;
    if (order.compare_half(x, f) <= 0) {
      split.lower.push_back(std::move(x));
    } else {
      split.upper.push_back(std::move(x));
    }
  }
  return split;
}

/// S(f) = (C ∖ {f}) ∖ I1(f), the root of the tree of irreducible
/// C-semigroups with Frobenius vector f.
inline CSemigroup root_semigroup(const ConePtr& cone, const MatrixOrder& order, const Point& f) {
  auto split = split_interval(*cone, order, f);
  auto gaps = std::move(split.lower);
  gaps.push_back(f);
  std::optional<CSemigroup> root;
  try {
    root = CSemigroup::from_gaps(cone, std::move(gaps));
  } catch (const InvalidGapSet& e) {
    throw std::logic_error(std::string("root semigroup failed validation: ") + e.what());
  }
  if (!is_irreducible(*root) || frobenius_vector(*root, order) != f)
    throw std::logic_error("root semigroup is not irreducible with Frobenius vector " + f.str());
  return *root;
}

struct ChildOptions {
  /// Prefilter candidates with the closed-form guards before revalidation.
  bool apply_guards = true;
};

/// Children of an irreducible S with Frobenius vector f: for each minimal
/// generator x ≻ f/2 with x ≤_C f, swap x for f − x in S. A candidate is kept
/// only if the result is a valid irreducible C-semigroup with Frobenius
/// vector f whose multiplicity is f − x ≺ f/2, so swapping back recovers S.
inline std::vector<CSemigroup> children(const CSemigroup& s, const Point& f, const MatrixOrder& order,
                                        ChildOptions options = {}) {
  if (!is_irreducible(s) || frobenius_vector(s, order) != f)
    throw Error("children() needs an irreducible semigroup with Frobenius vector " + f.str());
  const Cone& cone = s.cone();
  const Point m = multiplicity(s, order);
  std::vector<CSemigroup> out;
  for (const auto& x : s.minimal_generators()) {
    if (x == f || !cone.contains(f - x) || order.compare_half(x, f) <= 0) continue;
    const Point fx = f - x;
    if (options.apply_guards) {
      const Point twice_minus = 2 * x - f;
      if (cone.contains(twice_minus) && s.contains(twice_minus)) continue;
      if (3 * x == f || 3 * x == 2 * f || 4 * x == 3 * f) continue;
      if (!order.less(fx, m)) continue;
    }
    auto gaps = s.gaps();
    std::erase(gaps, fx);
    gaps.push_back(x);
    CSemigroup child = CSemigroup::whole_cone(s.cone_ptr());
    try {
      child = CSemigroup::from_gaps(s.cone_ptr(), std::move(gaps));
    } catch (const InvalidGapSet&) {
      continue;
    }
    if (!is_irreducible(child) || frobenius_vector(child, order) != f) continue;
    if (multiplicity(child, order) != fx || order.compare_half(fx, f) >= 0) continue;
    out.push_back(std::move(child));
  }
  std::sort(out.begin(), out.end(),
            [](const CSemigroup& a, const CSemigroup& b) { return a.gaps() < b.gaps(); });
  return out;
}

struct TreeNode {
  CSemigroup semigroup;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::size_t depth = 0;
};

/// The rooted tree of all irreducible C-semigroups with Frobenius vector f.
/// Node 0 is the root; nodes appear in breadth-first order.
struct IrreducibleTree {
  Point f;
  MatrixOrder order;
  std::vector<TreeNode> nodes;

  const TreeNode& root() const { return nodes.front(); }
  std::size_t size() const noexcept { return nodes.size(); }

  /// (parent, child) index pairs in breadth-first order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (auto c : nodes[i].children) out.emplace_back(i, c);
    }
    return out;
  }
};

inline IrreducibleTree irreducible_tree(const ConePtr& cone, const MatrixOrder& order, const Point& f,
                                        unsigned jobs = 1, ChildOptions options = {}) {
  IrreducibleTree tree{f, order, {}};
  tree.nodes.push_back({root_semigroup(cone, order, f), std::nullopt, {}, 0});
  std::unordered_map<std::vector<Point>, std::size_t, PointListHash> index;
  index.emplace(tree.nodes[0].semigroup.gaps(), 0);

  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<CSemigroup> parents;
    for (auto i : layer) parents.push_back(tree.nodes[i].semigroup);
    auto expanded = detail::parallel_map(
        parents, jobs, [&](const CSemigroup& s) { return children(s, f, order, options); });
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      const auto parent = layer[k];
      for (auto& child : expanded[k]) {
        if (index.contains(child.gaps())) continue;
        const auto id = tree.nodes.size();
        index.emplace(child.gaps(), id);
        tree.nodes.push_back({std::move(child), parent, {}, tree.nodes[parent].depth + 1});
        tree.nodes[parent].children.push_back(id);
        next.push_back(id);
      }
    }
    layer = std::move(next);
  }
  return tree;
}

}  // namespace csg
