#include <gtest/gtest.h>

#include <random>

#include "csg/order.hpp"
#include "csg/cone.hpp"
#include "support/fixtures.hpp"

namespace csg {
namespace {

TEST(ValidateOrder, AcceptsTheTwoDegreeOrders) {
  EXPECT_TRUE(validate_order({{1, 1}, {1, 0}}).valid);
  EXPECT_TRUE(validate_order({{1, 1}, {0, 1}}).valid);
}

TEST(ValidateOrder, RejectsNegativeTopEntryAndNamesColumn) {
  auto v = validate_order({{1, -1}, {0, 1}});
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.column.has_value());
  EXPECT_EQ(*v.column, 1u);
  EXPECT_NE(v.diagnostics.find("column 2"), std::string::npos);
}

TEST(ValidateOrder, RejectsSingularAndNonSquare) {
  EXPECT_FALSE(validate_order({{1, 1}, {2, 2}}).valid);
  EXPECT_THROW(validate_order({{1, 1, 0}, {1, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(MatrixOrder::from_rows({{0, 1}, {0, 0}}), Error);
}

TEST(MatrixOrder, ComparesByFirstDifferingRow) {
  const auto o1 = fixtures::order1();
  const auto o2 = fixtures::order2();
  // same degree; row 2 decides in opposite directions
  EXPECT_TRUE(o1.compare(Point{1, 2}, Point{2, 1}) < 0);
  EXPECT_TRUE(o2.compare(Point{1, 2}, Point{2, 1}) > 0);
  EXPECT_TRUE(o1.compare(Point{3, 1}, Point{3, 1}) == 0);
  EXPECT_TRUE(o1.compare(Point{5, 0}, Point{2, 4}) < 0);
}

TEST(MatrixOrder, CompareHalfUsesDoubling) {
  const auto o1 = fixtures::order1();
  const Point f{4, 2};
  EXPECT_TRUE(o1.compare_half(Point{2, 1}, f) == 0);
  EXPECT_TRUE(o1.compare_half(Point{1, 2}, f) < 0);
  EXPECT_TRUE(o1.compare_half(Point{2, 2}, f) > 0);
}

TEST(MatrixOrder, DimensionMismatchThrows) {
  EXPECT_THROW(fixtures::order1().compare(Point{1, 2, 3}, Point{1, 2, 3}), std::invalid_argument);
}

TEST(MatrixOrder, LargeEntriesCompareExactly) {
  const std::int64_t big = std::int64_t{1} << 62;
  auto o = MatrixOrder::from_rows({{big, big}, {1, 0}});
  EXPECT_TRUE(o.compare(Point{big, 0}, Point{big, 1}) < 0);
  EXPECT_TRUE(o.compare(Point{big, 1}, Point{big - 1, 2}) > 0);
}

TEST(PartialOrder, ConeOrderExamples) {
  const auto c = fixtures::steep_cone();
  EXPECT_TRUE(partial_leq(*c, Point{1, 1}, Point{4, 2}));
  EXPECT_TRUE(partial_leq(*c, Point{3, 2}, Point{4, 2}));
  EXPECT_FALSE(partial_leq(*c, Point{0, 1}, Point{1, 0}));
  EXPECT_TRUE(partial_leq(*c, Point{2, 2}, Point{2, 2}));
}

TEST(PartialOrder, ExplicitFiniteSet) {
  const std::vector<Point> l{Point{0, 0}, Point{1, 1}};
  EXPECT_TRUE(partial_leq(l, Point{1, 0}, Point{2, 1}));
  EXPECT_FALSE(partial_leq(l, Point{1, 0}, Point{3, 1}));
}

class OrderAxioms : public ::testing::TestWithParam<IntMatrix> {};

TEST_P(OrderAxioms, TotalAdditivePositiveAndHalfConsistent) {
  const auto order = MatrixOrder::from_rows(GetParam());
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::int64_t> coord(0, 9);
  auto draw = [&] { return Point{coord(rng), coord(rng)}; };
  for (int i = 0; i < 500; ++i) {
    const Point a = draw(), b = draw(), c = draw();
    const auto ab = order.compare(a, b);
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(order.compare(b, a), 0 <=> ab);
    if (ab <= 0) EXPECT_TRUE(order.compare(a + c, b + c) <= 0);
    EXPECT_TRUE(order.compare(Point{0, 0}, c) <= 0);
    EXPECT_EQ(order.compare_half(a, b), order.compare(2 * a, b));
  }
}

INSTANTIATE_TEST_SUITE_P(Matrices, OrderAxioms,
                         ::testing::Values(IntMatrix{{1, 1}, {1, 0}}, IntMatrix{{1, 1}, {0, 1}},
                                           IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{2, 3}, {0, -1}},
                                           IntMatrix{{0, 1}, {1, 0}}));

}  // namespace
}  // namespace csg
