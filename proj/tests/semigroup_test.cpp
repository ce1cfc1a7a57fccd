#include <gtest/gtest.h>

#include "csg/oracle.hpp"
#include "csg/semigroup.hpp"
#include "support/fixtures.hpp"

namespace csg {
namespace {

using fixtures::pts;
using fixtures::sorted;

TEST(FromGaps, SingleGapOverWideCone) {
  const auto s = fixtures::s1();
  EXPECT_EQ(s.gaps(), pts({{5, 2}}));
  EXPECT_EQ(s.minimal_generators(), sorted(fixtures::s1_generators()));
}

TEST(FromGaps, EmptyGapSetIsWholeCone) {
  const auto s = CSemigroup::from_gaps(fixtures::steep_cone(), {});
  EXPECT_EQ(s.genus(), 0u);
  EXPECT_EQ(s, CSemigroup::whole_cone(fixtures::steep_cone()));
  EXPECT_EQ(s.minimal_generators(), pts({{1, 0}, {1, 1}, {1, 2}}));
}

TEST(FromGaps, MissingDivisorCarriesWitness) {
  try {
    CSemigroup::from_gaps(fixtures::steep_cone_hilbert(), pts({{2, 0}, {2, 1}}));
    FAIL() << "expected InvalidGapSet";
  } catch (const InvalidGapSet& e) {
    EXPECT_EQ(e.x(), (Point{2, 0}));
    EXPECT_EQ(e.s(), (Point{1, 0}));
  }
}

TEST(FromGaps, RejectsPointsOutsideConeOrZero) {
  EXPECT_THROW(CSemigroup::from_gaps(fixtures::steep_cone(), pts({{1, 3}})), Error);
  EXPECT_THROW(CSemigroup::from_gaps(fixtures::steep_cone(), pts({{0, 0}})), Error);
}

TEST(FromGenerators, PseudoSymmetricExample) {
  const auto s = CSemigroup::from_generators(fixtures::s2_generators());
  EXPECT_EQ(s.gaps(), pts({{4, 1}, {5, 1}, {8, 2}}));
  EXPECT_EQ(s.cone(), *fixtures::wide_cone());
  EXPECT_EQ(s.minimal_generators(), sorted(fixtures::s2_generators()));
}

TEST(FromGenerators, HilbertBasisGivesCone) {
  const auto c = fixtures::wide_cone();
  EXPECT_TRUE(CSemigroup::from_generators(c->hilbert_basis()).gaps().empty());
}

TEST(FromGenerators, UnimodularConeHasNoGaps) {
  const auto s = CSemigroup::from_generators(pts({{1, 1}, {2, 1}}));
  EXPECT_TRUE(s.gaps().empty());
  EXPECT_EQ(s.cone().rays(), pts({{1, 1}, {2, 1}}));
}

TEST(FromGenerators, FundamentalExample) {
  const auto s = CSemigroup::from_generators(fixtures::fundamental_generators());
  EXPECT_EQ(s.gaps(), fixtures::fundamental_gaps_full());
}

TEST(FromGenerators, Errors) {
  // every element has an even first coordinate: infinitely many gaps
  EXPECT_THROW(CSemigroup::from_generators(pts({{2, 0}, {2, 2}, {2, 1}, {4, 1}})), Error);
  EXPECT_THROW(CSemigroup::from_generators({}), Error);
  EXPECT_THROW(CSemigroup::from_generators(pts({{0, 0}, {1, 0}})), Error);
}

TEST(Membership, Examples) {
  EXPECT_FALSE(membership(fixtures::s1(), Point{5, 2}));
  EXPECT_TRUE(membership(fixtures::s1(), Point{0, 0}));
  EXPECT_TRUE(membership(fixtures::s2(), Point{7, 2}));
  EXPECT_FALSE(membership(fixtures::s2(), Point{1, 3}));
}

TEST(Membership, AgreesWithGeneratorReachability) {
  const auto s = fixtures::s2();
  oracle::BoundedBox box(Point{20, 8});
  const auto reach = oracle::reachable(fixtures::s2_generators(), box);
  for (const auto& x : box.points()) EXPECT_EQ(reach[box.index(x)], s.contains(x)) << x;
}

TEST(Genus, AndFrobeniusVector) {
  const auto s1 = fixtures::s1();
  EXPECT_EQ(genus(s1), 1u);
  for (const auto& o : {fixtures::order1(), fixtures::order2(), MatrixOrder::lex(2)})
    EXPECT_EQ(frobenius_vector(s1, o), (Point{5, 2}));
  const auto c = CSemigroup::whole_cone(fixtures::wide_cone());
  EXPECT_EQ(genus(c), 0u);
  EXPECT_THROW(frobenius_vector(c, fixtures::order1()), Error);
  EXPECT_EQ(frobenius_vector(fixtures::s2(), fixtures::order1()), (Point{8, 2}));
}

TEST(SmallElements, CountsElementsBelowFrobenius) {
  const auto s2 = fixtures::s2();
  const auto o = fixtures::order1();
  const auto n = small_elements(s2, o);
  std::vector<Point> brute;
  for (const auto& x : oracle::BoundedBox(Point{10, 10}).points()) {
    if (s2.contains(x) && o.less_equal(x, Point{8, 2})) brute.push_back(x);
  }
  EXPECT_EQ(sorted(n.elements), sorted(brute));
  EXPECT_EQ(n.count(), brute.size());
}

TEST(IntervalS, Examples) {
  const auto s1 = fixtures::s1();
  const auto i1 = interval_s(s1, Point{5, 2});
  EXPECT_EQ(i1, pts({{0, 0}}));
  EXPECT_EQ(interval_s(fixtures::s2(), Point{0, 0}), pts({{0, 0}}));
  const auto s2 = fixtures::s2();
  std::vector<Point> brute;
  for (const auto& x : oracle::BoundedBox(Point{8, 2}).points()) {
    if (s2.contains(x) && s2.cone().contains(Point{8, 2} - x)) brute.push_back(x);
  }
  EXPECT_EQ(brute.size(), 2u);
  EXPECT_EQ(interval_s(s2, Point{8, 2}), brute);
}

TEST(Apery, Examples) {
  EXPECT_EQ(apery(fixtures::s1(), Point{3, 1}), pts({{8, 3}}));
  EXPECT_TRUE(fixtures::s1().contains(Point{8, 3}));
  EXPECT_TRUE(apery(CSemigroup::whole_cone(fixtures::steep_cone()), Point{1, 1}).empty());
  const auto s2 = fixtures::s2();
  std::vector<Point> brute;
  for (const auto& a : pts({{7, 2}, {8, 2}, {11, 3}})) {
    if (s2.contains(a)) brute.push_back(a);
  }
  EXPECT_EQ(brute, pts({{7, 2}, {11, 3}}));
  EXPECT_EQ(apery(s2, Point{3, 1}), brute);
}

TEST(Apery, RequiresNonzeroElement) {
  EXPECT_THROW(apery(fixtures::s1(), Point{5, 2}), Error);
  EXPECT_THROW(apery(fixtures::s1(), Point{0, 0}), Error);
}

TEST(PseudoFrobenius, Examples) {
  EXPECT_EQ(pseudo_frobenius(fixtures::s2()), pts({{4, 1}, {8, 2}}));
  EXPECT_EQ(pseudo_frobenius(fixtures::s1()), pts({{5, 2}}));
  const auto s = CSemigroup::from_generators(fixtures::fundamental_generators());
  EXPECT_EQ(pseudo_frobenius(s), pts({{5, 1}, {5, 2}}));
  for (const auto& t : {fixtures::s1(), fixtures::s2(), s}) EXPECT_EQ(pseudo_frobenius(t), oracle::oracle_pf(t));
}

TEST(Type, Examples) {
  EXPECT_EQ(type(fixtures::s1()), 1u);
  EXPECT_EQ(type(fixtures::s2()), 2u);
  EXPECT_EQ(type(CSemigroup::whole_cone(fixtures::quadrant())), 0u);
}

TEST(SpecialGaps, Examples) {
  EXPECT_EQ(special_gaps(fixtures::s2()), pts({{8, 2}}));
  EXPECT_TRUE(special_gaps(CSemigroup::whole_cone(fixtures::quadrant())).empty());
  EXPECT_EQ(special_gaps(CSemigroup::from_generators(fixtures::fundamental_generators())), pts({{5, 1}, {5, 2}}));
}

TEST(FundamentalGaps, Examples) {
  EXPECT_EQ(fundamental_gaps(CSemigroup::from_generators(fixtures::fundamental_generators())),
            fixtures::fundamental_x());
  EXPECT_TRUE(fundamental_gaps(CSemigroup::whole_cone(fixtures::quadrant())).empty());
  const auto s1 = fixtures::s1();
  EXPECT_TRUE(s1.contains(Point{10, 4}));
  EXPECT_TRUE(s1.contains(Point{15, 6}));
  EXPECT_EQ(fundamental_gaps(s1), pts({{5, 2}}));
}

TEST(MinimalGenerators, Examples) {
  auto gaps = fixtures::lower_half_order1();
  gaps.push_back(Point{4, 2});
  const auto root = CSemigroup::from_gaps(fixtures::steep_cone(), gaps);
  EXPECT_EQ(root.minimal_generators(), sorted(fixtures::root_generators_order1()));
  EXPECT_EQ(root.minimal_generators(), oracle::oracle_mingens(root));
  EXPECT_EQ(minimal_generators(CSemigroup::whole_cone(fixtures::steep_cone())), pts({{1, 0}, {1, 1}, {1, 2}}));
  const auto s = CSemigroup::from_gaps(fixtures::diagonal_cone(), fixtures::fundamental_gaps_full());
  EXPECT_EQ(s.minimal_generators(), sorted(fixtures::fundamental_generators()));
}

TEST(MinimalGenerators, SharedBetweenCopies) {
  const auto s = fixtures::s2();
  const auto copy = s;
  EXPECT_EQ(&s.minimal_generators(), &copy.minimal_generators());
}

TEST(Multiplicity, Examples) {
  const auto o1 = fixtures::order1();
  auto gaps = fixtures::lower_half_order1();
  gaps.push_back(Point{4, 2});
  const auto root = CSemigroup::from_gaps(fixtures::steep_cone(), gaps);
  // brute force: smallest generator by a full scan
  Point best = root.minimal_generators().front();
  for (const auto& g : root.minimal_generators()) {
    if (o1.less(g, best)) best = g;
  }
  EXPECT_EQ(best, (Point{3, 0}));
  EXPECT_EQ(multiplicity(root, o1), best);
  EXPECT_EQ(multiplicity(CSemigroup::whole_cone(fixtures::quadrant()), o1), (Point{0, 1}));
  EXPECT_EQ(multiplicity(CSemigroup::from_generators(fixtures::fundamental_generators()), o1), (Point{2, 0}));
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(classify_symmetry(fixtures::s1()), Symmetry::symmetric);
  EXPECT_EQ(classify_symmetry(fixtures::s2()), Symmetry::pseudo_symmetric);
  const auto s = CSemigroup::from_generators(fixtures::fundamental_generators());
  EXPECT_EQ(classify_symmetry(s), Symmetry::neither);
  for (const auto& t : {fixtures::s1(), fixtures::s2(), s})
    EXPECT_EQ(classify_symmetry(t), classify_by_pseudo_frobenius(t));
  EXPECT_THROW(classify_symmetry(CSemigroup::whole_cone(fixtures::quadrant())), Error);
  EXPECT_EQ(to_string(Symmetry::pseudo_symmetric), "pseudo-symmetric");
}

TEST(FrobeniusNumber, Examples) {
  EXPECT_EQ(frobenius_number(fixtures::s1()), 2u);
  EXPECT_EQ(frobenius_number(fixtures::s2()), 5u);
  EXPECT_THROW(frobenius_number(CSemigroup::whole_cone(fixtures::quadrant())), Error);
}

TEST(AperyMaximals, ShiftToPseudoFrobenius) {
  EXPECT_EQ(apery_maximals(fixtures::s1(), Point{3, 1}), pts({{8, 3}}));
  EXPECT_TRUE(apery_maximals(CSemigroup::whole_cone(fixtures::quadrant()), Point{1, 0}).empty());
  EXPECT_EQ(apery_maximals(fixtures::s2(), Point{3, 1}), pts({{7, 2}, {11, 3}}));
}

TEST(Invariants, ReportIsConsistent) {
  const auto r = invariants(fixtures::s2(), fixtures::order1());
  EXPECT_EQ(r.genus, 3u);
  EXPECT_EQ(r.frobenius_vector, (Point{8, 2}));
  EXPECT_EQ(r.frobenius_number, 5u);
  EXPECT_EQ(r.type, 2u);
  EXPECT_EQ(r.symmetry, Symmetry::pseudo_symmetric);
  EXPECT_TRUE(is_subset(r.sg, r.pf));
  EXPECT_TRUE(is_subset(r.pf, fixtures::s2().gaps()));
  ASSERT_TRUE(r.n.has_value());
  EXPECT_LE(r.genus, r.type * *r.n);

  const auto whole = invariants(CSemigroup::whole_cone(fixtures::quadrant()), fixtures::order1());
  EXPECT_FALSE(whole.frobenius_vector.has_value());
  EXPECT_FALSE(whole.symmetry.has_value());
  EXPECT_EQ(whole.minimal_generators, pts({{0, 1}, {1, 0}}));
}

TEST(Irreducible, MatchesSymmetryClasses) {
  EXPECT_TRUE(is_irreducible(fixtures::s1()));
  EXPECT_TRUE(is_irreducible(fixtures::s2()));
  EXPECT_FALSE(is_irreducible(CSemigroup::from_generators(fixtures::fundamental_generators())));
  EXPECT_FALSE(is_irreducible(CSemigroup::whole_cone(fixtures::quadrant())));
}

}  // namespace
}  // namespace csg
