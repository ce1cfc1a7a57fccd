// Classifies a few semigroups over the cone spanned by (7,3) and (15,1) and
// draws them.

#include <iostream>

#include "csg/csg.hpp"
#include "csg/render.hpp"

namespace {

void report(const char* name, const csg::CSemigroup& s) {
  using namespace csg;
  const auto order = MatrixOrder::graded_lex(2);
  std::cout << name << ": genus " << s.genus() << ", F " << frobenius_vector(s, order) << ", type " << type(s)
            << ", " << to_string(classify_symmetry(s, order)) << '\n';
  std::cout << "  PF";
  for (const auto& x : pseudo_frobenius(s)) std::cout << ' ' << x;
  std::cout << "\n  SG";
  for (const auto& x : special_gaps(s)) std::cout << ' ' << x;
  std::cout << '\n' << render::ascii_grid(s, 9) << '\n';
}

}  // namespace

int main() {
  using namespace csg;
  const auto cone = make_cone({Point{7, 3}, Point{15, 1}});
  report("one gap", CSemigroup::from_gaps(cone, {Point{5, 2}}));
  const auto s = CSemigroup::from_gaps(cone, {Point{4, 1}, Point{5, 1}, Point{8, 2}});
  report("three gaps", s);
  // filling a special gap keeps a semigroup
  report("three gaps, (8,2) filled", add_special_gap(s, Point{8, 2}));
}
