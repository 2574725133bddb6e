#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

namespace {

Subdivision three_face_example() {
  const auto p = LatticePolygon::from_vertices({{0, 0}, {0, 4}, {2, 2}});
  return Subdivision::from_faces(p, {LatticePolygon::from_vertices({{0, 0}, {2, 2}, {1, 2}}),
                                     LatticePolygon::from_vertices({{0, 0}, {1, 2}, {0, 4}}),
                                     LatticePolygon::from_vertices({{1, 2}, {2, 2}, {0, 4}})});
}

}  // namespace

TEST(TorusGroup, ThreeFaceMatrix) {
  const auto g = build_matrix(three_face_example());
  EXPECT_EQ(g.matrix, (IntegerMatrix{{1, 2, -1, -2, 0, 0}, {1, 0, 0, 0, -1, 0}, {0, 0, -1, 2, 1, -2}}));
  EXPECT_EQ(g.snf, (std::vector<Integer>{1, 1, 2}));
  EXPECT_EQ(g.l_V, 2);
  EXPECT_EQ(g.dim_G, 3u);
  EXPECT_TRUE(g.special_points.empty());
}

TEST(TorusGroup, SpecialPoints) {
  const auto slanted = LatticePolygon::from_vertices({{0, 0}, {1, 0}, {2, 2}, {1, 2}});
  EXPECT_EQ(special_points(slanted), (std::vector<LatticePoint>{{1, 1}}));
  // Sides of length 2 but primitive directions spanning the lattice.
  EXPECT_TRUE(special_points(LatticePolygon::from_vertices({{0, 0}, {2, 0}, {2, 2}, {0, 2}})).empty());
  EXPECT_TRUE(special_points(LatticePolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).empty());
  EXPECT_THROW(special_points(LatticePolygon::simplex(1)), NotParallelogram);
}

TEST(TorusGroup, NonNodalIsRejected) {
  const auto hex = LatticePolygon::from_vertices({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
  EXPECT_THROW(build_matrix(trivial_subdivision(hex)), NotNodal);
}

TEST(TorusGroup, BoundaryMembership) {
  const auto s = trivial_subdivision(LatticePolygon::simplex(2));
  const ComplexPoly l{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}};
  EXPECT_TRUE(is_in_V_boundary(l * l, s));
  // 1 + x^2 + y^2 restricts to 1 + x^2 on the bottom edge, not a binomial power.
  EXPECT_FALSE(is_in_V_boundary(ComplexPoly{{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}}, s));

  const auto sq = trivial_subdivision(LatticePolygon::from_vertices({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  const ComplexPoly a{{{0, 0}, 1}, {{1, 0}, 1}}, b{{{0, 0}, 1}, {{0, 1}, 3}};
  EXPECT_TRUE(is_in_V_boundary(a * a * b * b, sq));
  auto bumped = a * a * b * b;
  bumped.add({1, 1}, GaussianRational(1));
  EXPECT_FALSE(is_in_V_boundary(bumped, sq));
}

TEST(TorusGroupProperty, DimensionAndComponentCount) {
  Rng rng(71);
  for (int i = 0; i < 150; ++i) {
    const auto n = random_nodal_subdivision(rng);
    const auto& s = n.subdivision;
    const auto g = build_matrix(s);
    std::set<LatticePoint> vertices;
    for (const auto& f : s.faces())
      for (const auto& v : oracle::hull(f.vertices())) vertices.insert(v);
    EXPECT_EQ(g.dim_G, vertices.size() - 1 - s.parallelograms().size());
    const auto rows = g.matrix.to_rows();
    EXPECT_EQ(g.dim_G, 2 * s.faces().size() - oracle::rank(oracle::to_rational(rows)));
    if (!rows.empty() && rows.size() <= 4 && rows[0].size() <= 12) EXPECT_EQ(g.l_V, oracle::gcd_of_maximal_minors(rows));
  }
}
