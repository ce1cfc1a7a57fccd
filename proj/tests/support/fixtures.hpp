#pragma once

// Worked instances shared by the unit, property and acceptance suites.

#include <vector>

#include "csg/csg.hpp"

namespace csg::fixtures {

using Points = std::vector<Point>;

inline Points pts(std::initializer_list<std::pair<int, int>> list) {
  Points out;
  for (auto [a, b] : list) out.push_back(Point{a, b});
  return out;
}

inline Points sorted(Points v) { return canonical(std::move(v)); }

// Cone with extremal rays (7,3) and (15,1).
inline ConePtr wide_cone() { return make_cone(pts({{7, 3}, {15, 1}})); }

inline Points s1_generators() {
  return pts({{3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {7, 3}, {8, 1}, {8, 3},
              {9, 1}, {10, 1}, {11, 1}, {12, 1}, {12, 5}, {13, 1}, {14, 1}, {15, 1}});
}

inline Points s2_generators() {
  return pts({{3, 1}, {5, 2}, {6, 1}, {7, 1}, {7, 2}, {7, 3}, {8, 1},
              {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {15, 1}});
}

inline CSemigroup s1() { return CSemigroup::from_gaps(wide_cone(), pts({{5, 2}})); }
inline CSemigroup s2() { return CSemigroup::from_gaps(wide_cone(), pts({{4, 1}, {5, 1}, {8, 2}})); }

// Cone spanned by (1,0) and (1,2); its Hilbert basis adds (1,1).
inline ConePtr steep_cone() { return make_cone(pts({{1, 0}, {1, 2}})); }
inline ConePtr steep_cone_hilbert() { return make_cone(pts({{1, 0}, {1, 1}, {1, 2}})); }
inline ConePtr diagonal_cone() { return make_cone(pts({{1, 0}, {1, 1}})); }
inline ConePtr quadrant() { return make_cone(pts({{1, 0}, {0, 1}})); }

inline MatrixOrder order1() { return MatrixOrder::from_rows({{1, 1}, {1, 0}}); }
inline MatrixOrder order2() { return MatrixOrder::from_rows({{1, 1}, {0, 1}}); }

inline Point tree_f() { return Point{4, 2}; }

inline Points interval_4_2() {
  return pts({{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {4, 2}});
}
inline Points lower_half_order1() { return pts({{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}); }
inline Points lower_half_order2() { return pts({{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}}); }

inline Points root_generators_order1() {
  return pts({{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2},
              {2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}});
}
inline Points root_generators_order2() {
  return pts({{4, 0}, {5, 0}, {6, 0}, {7, 0}, {3, 1}, {4, 1}, {5, 1},
              {6, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}});
}

// The three children of the order-1 root.
inline std::vector<Points> root_children_order1() {
  return {pts({{4, 0}, {5, 0}, {6, 0}, {7, 0}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}}),
          pts({{3, 0}, {4, 0}, {5, 0}, {1, 1}, {3, 2}, {2, 3}, {2, 4}, {3, 6}}),
          pts({{2, 0}, {3, 0}, {3, 1}, {4, 1}, {3, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {3, 6}})};
}

// Node labels of the drawn tree for order 1, root label as printed.
inline Points figure1_root_label() {
  return pts({{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}});
}
inline std::vector<Points> figure1_other_nodes() {
  auto out = root_children_order1();
  out.push_back(pts({{4, 0}, {5, 0}, {6, 0}, {7, 0}, {1, 1}, {4, 1}, {1, 2}, {3, 2}}));
  out.push_back(pts({{2, 0}, {5, 0}, {3, 1}, {4, 1}, {1, 2}, {2, 3}, {3, 3}, {3, 4}}));
  out.push_back(pts({{1, 0}, {3, 1}, {5, 2}, {2, 3}, {2, 4}, {3, 5}, {3, 6}}));
  return out;
}
inline std::vector<Points> figure2_nodes() {
  return {root_generators_order2(),
          pts({{4, 0}, {5, 0}, {6, 0}, {7, 0}, {1, 1}, {4, 1}, {1, 2}, {3, 2}}),
          root_generators_order1(),
          pts({{2, 0}, {5, 0}, {3, 1}, {4, 1}, {1, 2}, {2, 3}, {3, 3}, {3, 4}}),
          pts({{3, 0}, {4, 0}, {5, 0}, {1, 1}, {3, 2}, {2, 3}, {2, 4}, {3, 6}}),
          pts({{2, 0}, {3, 0}, {3, 1}, {4, 1}, {3, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {3, 6}}),
          pts({{1, 0}, {3, 1}, {5, 2}, {2, 3}, {2, 4}, {3, 5}, {3, 6}})};
}

// Eight-point removal example over the cone with Hilbert basis (1,0),(1,1),(1,2).
inline Points removal_gaps() {
  return pts({{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {2, 4}});
}
inline std::vector<Points> removal_trace() {
  return {pts({{2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}}),
          pts({{2, 0}, {3, 0}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {2, 3}}),
          pts({{2, 0}, {3, 0}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}})};
}
inline Points removal_result() {
  return pts({{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}, {5, 3}, {3, 4}, {4, 4},
              {5, 4}, {3, 5}, {4, 5}, {5, 5}, {3, 6}, {4, 6}, {5, 6}, {4, 7}, {5, 7}, {4, 8}, {5, 8}, {5, 9}, {5, 10}});
}

// Fundamental-gap example over the diagonal cone.
inline Points fundamental_x() { return pts({{1, 1}, {3, 0}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}); }
inline Points fundamental_generators() { return pts({{2, 0}, {5, 0}, {2, 1}, {2, 2}, {3, 3}}); }
inline Points fundamental_gaps_full() { return pts({{1, 0}, {1, 1}, {3, 0}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}); }

// The six semigroups listed for Frobenius vector (2,1) over the Hilbert cone.
inline Point table_f() { return Point{2, 1}; }
inline std::vector<Points> table_generators() {
  return {pts({{2, 0}, {3, 0}, {1, 1}, {1, 2}}),
          pts({{1, 0}, {3, 1}, {1, 2}, {2, 3}}),
          pts({{3, 0}, {4, 0}, {5, 0}, {1, 1}, {3, 1}, {1, 2}, {3, 2}}),
          pts({{2, 0}, {3, 0}, {3, 1}, {4, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}),
          pts({{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}}),
          pts({{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4},
               {3, 4}, {3, 5}, {3, 6}})};
}

inline std::vector<Points> sorted_generator_sets(const std::vector<CSemigroup>& v) {
  std::vector<Points> out;
  for (const auto& s : v) out.push_back(s.minimal_generators());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Points> sorted_sets(std::vector<Points> v) {
  for (auto& s : v) s = sorted(std::move(s));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace csg::fixtures
