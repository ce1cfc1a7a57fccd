// Builds the tree of irreducible semigroups with Frobenius vector (4,2) over
// the cone spanned by (1,0) and (1,2), and prints it as DOT.
//
//   irreducible_tree_demo | dot -Tsvg > tree.svg

#include <iostream>

#include "csg/csg.hpp"
#include "csg/render.hpp"

int main() {
  using namespace csg;
  const auto cone = make_cone({Point{1, 0}, Point{1, 2}});
  const auto order = MatrixOrder::from_rows({{1, 1}, {1, 0}});
  const auto tree = irreducible_tree(cone, order, Point{4, 2});

  std::cerr << tree.size() << " irreducible semigroups, genus " << tree.root().semigroup.genus() << '\n';
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto& s = tree.nodes[i].semigroup;
    std::cerr << "  n" << i << " depth " << tree.nodes[i].depth << ' ' << to_string(classify_symmetry(s, order))
              << " m=" << multiplicity(s, order) << '\n';
  }
  std::cout << render::dot(tree);
}
