#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

TEST(DualCurve, SquareOfLineHasThreeDoubleRays) {
  const ComplexPoly l{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}};
  const auto f = LaurentPoly::from(l * l);
  const auto c = dualize(newton_polygon(f), valuation_weight(f));
  EXPECT_EQ(c.vertices.size(), 1u);
  EXPECT_TRUE(c.edges.empty());
  ASSERT_EQ(c.rays.size(), 3u);
  std::set<LatticePoint> dirs;
  for (const auto& r : c.rays) {
    EXPECT_EQ(r.weight, 2);
    dirs.insert(r.direction);
  }
  EXPECT_EQ(dirs, (std::set<LatticePoint>{{-1, 0}, {0, -1}, {1, 1}}));
  EXPECT_TRUE(check_balancing(c));
}

TEST(DualCurve, DiscriminantCurve) {
  const auto p = LatticePolygon::from_vertices({{0, 0}, {0, 2}, {2, 1}});
  const auto w = WeightFunction::from_pairs(p, {{{0, 0}, Rational(-1)}, {{0, 1}, Rational(0)}, {{0, 2}, Rational(0)},
                                                {{1, 1}, Rational(0)}, {{2, 1}, Rational(0)}});
  const auto c = dualize(p, w);
  EXPECT_EQ(c.vertices.size(), 2u);
  ASSERT_EQ(c.edges.size(), 1u);
  EXPECT_EQ(c.edges[0].weight, 2);
  EXPECT_EQ(c.rays.size(), 4u);
  EXPECT_TRUE(check_balancing(c));
  EXPECT_TRUE(oracle::corner_locus_ok(w, c));
}

TEST(DualCurve, UnbalancedCurveIsDetected) {
  const auto p = LatticePolygon::simplex(1);
  auto c = dualize(p, WeightFunction::zero(p));
  ASSERT_TRUE(check_balancing(c));
  c.rays[0].weight = 2;
  EXPECT_FALSE(check_balancing(c));
}

TEST(DualCurve, PassesThrough) {
  const auto p = LatticePolygon::simplex(1);
  const auto w = WeightFunction::zero(p);
  EXPECT_TRUE(passes_through(p, w, {Rational(0), Rational(0)}));
  EXPECT_TRUE(passes_through(p, w, {Rational(-3), Rational(0)}));
  EXPECT_TRUE(passes_through(p, w, {Rational(5, 2), Rational(5, 2)}));
  EXPECT_FALSE(passes_through(p, w, {Rational(1), Rational(2)}));
}

TEST(DualCurveProperty, BalancedAndOnCornerLocus) {
  Rng rng(61);
  for (int i = 0; i < 150; ++i) {
    const auto p = random_polygon(rng, 4, 16);
    const auto w = random_weight(rng, p);
    const auto c = dualize(p, w);
    EXPECT_TRUE(check_balancing(c));
    EXPECT_TRUE(oracle::corner_locus_ok(w, c)) << "instance " << i;
    EXPECT_EQ(c.vertices.size(), c.dual.faces().size());
  }
}
