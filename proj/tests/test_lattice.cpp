#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

namespace {

std::vector<LatticePoint> random_points(Rng& rng, long box, int k) {
  std::vector<LatticePoint> pts;
  for (int i = 0; i < k; ++i) pts.emplace_back(uniform(rng, -box, box), uniform(rng, -box, box));
  return pts;
}

}  // namespace

TEST(Lattice, PrimitiveAndLength) {
  EXPECT_EQ(primitive(LatticePoint(4, -6)), LatticePoint(2, -3));
  EXPECT_EQ(primitive(LatticePoint(0, -5)), LatticePoint(0, -1));
  EXPECT_EQ(lattice_length(Segment{{0, 0}, {6, 4}}), 2);
  EXPECT_EQ(segment_points(Segment{{0, 0}, {2, 4}}).size(), 3u);
}

TEST(Lattice, CollinearHullIsRejected) {
  EXPECT_THROW(LatticePolygon({{0, 0}, {1, 1}, {3, 3}}), InvalidPolygon);
  EXPECT_THROW(LatticePolygon({{2, 5}}), InvalidPolygon);
}

TEST(Lattice, SimplexPoints) {
  const auto p = LatticePolygon::simplex(3);
  EXPECT_EQ(p.lattice_points().size(), 10u);
  EXPECT_EQ(p.interior_points().size(), 1u);
  EXPECT_EQ(p.boundary_points().size(), 9u);
  EXPECT_EQ(p.twice_area(), 9);
}

TEST(LatticeProperty, HullMatchesBruteForce) {
  Rng rng(11);
  int checked = 0;
  while (checked < 150) {
    auto pts = random_points(rng, 5, static_cast<int>(uniform(rng, 3, 9)));
    const auto expected = oracle::hull(pts);
    if (expected.size() < 3) continue;
    LatticePolygon p(pts);
    auto got = p.vertices();
    // Same cyclic sequence, possibly rotated.
    ASSERT_EQ(got.size(), expected.size());
    auto it = std::find(got.begin(), got.end(), expected[0]);
    ASSERT_NE(it, got.end());
    std::rotate(got.begin(), it, got.end());
    EXPECT_EQ(got, expected);
    ++checked;
  }
}

TEST(LatticeProperty, PickAndPointCounts) {
  Rng rng(12);
  for (int i = 0; i < 150; ++i) {
    const auto p = random_polygon(rng, 6, 60);
    const auto brute = oracle::lattice_points(p.vertices());
    EXPECT_EQ(p.lattice_points(), brute);
    const auto b = oracle::boundary_count(p.vertices());
    EXPECT_EQ(p.boundary_points().size(), b);
    const Integer interior(static_cast<long>(brute.size() - b));
    EXPECT_EQ(p.twice_area(), 2 * interior + Integer(static_cast<long>(b)) - 2);
    EXPECT_EQ(p.twice_area(), oracle::twice_area(p.vertices()));
  }
}

TEST(LatticeProperty, MinkowskiSumMatchesBruteForce) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_polygon(rng, 4, 30);
    const auto q = random_polygon(rng, 4, 30);
    std::vector<LatticePoint> sums;
    for (const auto& a : p.vertices())
      for (const auto& b : q.vertices()) sums.push_back(a + b);
    EXPECT_EQ(minkowski_sum(p, q).twice_area(), oracle::twice_area(oracle::hull(sums)));
  }
}

TEST(Lattice, InteriorOverlap) {
  const LatticePolygon a({{0, 0}, {2, 0}, {0, 2}});
  const LatticePolygon b({{2, 0}, {2, 2}, {0, 2}});
  const LatticePolygon c({{1, 0}, {2, 0}, {2, 2}});
  EXPECT_FALSE(interiors_overlap(a, b));
  EXPECT_TRUE(interiors_overlap(a, c));
}
