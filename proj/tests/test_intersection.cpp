#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

TEST(Intersection, TwoLines) {
  const auto p = LatticePolygon::simplex(1);
  const auto a = dualize(p, WeightFunction::zero(p));
  const auto b = translated(a, {Rational(1), Rational(3)});
  const auto r = stable_intersect(a, b);
  EXPECT_EQ(r.total, 1);
  ASSERT_EQ(r.points.size(), 1u);
  // The (1,1) ray of a meets the (0,-1) ray of b.
  EXPECT_EQ(r.points[0].location, PlanePoint(Rational(1), Rational(1)));
}

TEST(Intersection, CurveWithItself) {
  const auto p = LatticePolygon::simplex(2);
  Rng rng(5);
  const auto c = dualize(p, random_weight(rng, p));
  EXPECT_EQ(stable_intersect(c, c).total, 4);
}

TEST(Intersection, SeedOnlyMovesTheDisplacement) {
  Rng rng(6);
  const auto p = random_polygon(rng, 3, 8), q = random_polygon(rng, 3, 8);
  const auto a = dualize(p, random_weight(rng, p)), b = dualize(q, random_weight(rng, q));
  EXPECT_EQ(stable_intersect(a, b, 1).total, stable_intersect(a, b, 2).total);
}

TEST(IntersectionProperty, BernsteinCount) {
  Rng rng(91);
  for (int i = 0; i < 150; ++i) {
    const auto p = random_polygon(rng, 3, 8), q = random_polygon(rng, 3, 8);
    const auto a = dualize(p, random_weight(rng, p, 6)), b = dualize(q, random_weight(rng, q, 6));
    const auto r = stable_intersect(a, b, static_cast<std::uint64_t>(i));
    EXPECT_EQ(r.total, oracle::mixed_volume(p.vertices(), q.vertices())) << "instance " << i;
    EXPECT_EQ(mixed_volume(p, q), oracle::mixed_volume(p.vertices(), q.vertices()));
  }
}

TEST(LatticeIndex, CoordinateAndDiagonalLines) {
  const RationalLinearSpace x{2, {{Integer(1), Integer(0)}}};
  const RationalLinearSpace y{2, {{Integer(0), Integer(3)}}};
  const RationalLinearSpace d{2, {{Integer(2), Integer(4)}}};
  EXPECT_EQ(lattice_index(x, y), 1);
  EXPECT_EQ(lattice_index(x, d), 2);
  EXPECT_EQ(saturated_basis(d).size(), 1u);
  EXPECT_THROW(lattice_index(x, x), NotComplementary);
}
