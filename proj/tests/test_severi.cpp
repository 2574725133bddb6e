#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

namespace {

LatticePolygon discriminant_polygon() { return LatticePolygon::from_vertices({{0, 0}, {0, 2}, {2, 1}}); }

WeightFunction discriminant_weight(const LatticePolygon& p) {
  return WeightFunction::from_pairs(p, {{{0, 0}, Rational(-1)}, {{0, 1}, Rational(0)}, {{0, 2}, Rational(0)},
                                        {{1, 1}, Rational(0)}, {{2, 1}, Rational(0)}});
}

}  // namespace

TEST(Severi, Dimension) {
  EXPECT_EQ(severi_dimension(SeveriSpec(LatticePolygon::simplex(3), 1)), 8u);
  EXPECT_EQ(severi_dimension(SeveriSpec(discriminant_polygon(), 1)), 3u);
  EXPECT_THROW(SeveriSpec(LatticePolygon::simplex(1), 2), DeltaTooLarge);
}

TEST(Severi, DiscriminantWeight) {
  const auto p = discriminant_polygon();
  const auto r = severi_weight(SeveriSpec(p, 1), discriminant_weight(p));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.verdict, SupportVerdict::MaxRankCandidate);
  EXPECT_TRUE(r.in_support);
  EXPECT_EQ(r.l_V, 1);
  EXPECT_EQ(r.m_sev, 2);
  EXPECT_EQ(r.mu, 4);
  EXPECT_EQ(r.xi, Rational(2));
  EXPECT_EQ(Rational(r.m_sev) * r.xi, Rational(r.mu));
}

TEST(Severi, TriangulationOfTooHighRankIsRejected) {
  const auto p = discriminant_polygon();
  const auto w = WeightFunction::from_pairs(p, {{{0, 0}, Rational(0)}, {{0, 1}, Rational(1)}, {{0, 2}, Rational(0)},
                                                {{1, 1}, Rational(2)}, {{2, 1}, Rational(0)}});
  const SeveriSpec spec(p, 1);
  EXPECT_EQ(support_test(spec, w), SupportVerdict::Rejected);
  EXPECT_THROW(severi_weight(spec, w), NotMaxRank);
}

TEST(Severi, LineWithNoNodes) {
  const auto p = LatticePolygon::simplex(1);
  const SeveriSpec spec(p, 0);
  EXPECT_EQ(support_test(spec, WeightFunction::zero(p)), SupportVerdict::MaxRankCandidate);
  const auto r = severi_weight(spec, WeightFunction::zero(p));
  EXPECT_EQ(r.m_sev, 1);
  EXPECT_EQ(r.mu, 1);
}

TEST(Severi, UnitSquareParallelogram) {
  const auto p = LatticePolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto r = severi_weight(SeveriSpec(p, 1), WeightFunction::zero(p));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.l_V, 1);
  EXPECT_EQ(r.m_sev, 1);
  EXPECT_EQ(r.mu, 1);
}

TEST(Severi, NonPrimitiveParallelogramNeedsRegularPoint) {
  // One parallelogram face with the interior point (1,1) special: delta = 1 + 1.
  const auto p = LatticePolygon::from_vertices({{0, 0}, {1, 0}, {2, 2}, {1, 2}});
  const SeveriSpec spec(p, 2);
  EXPECT_THROW(severi_weight(spec, WeightFunction::zero(p)), RegularPointUnasserted);
  const auto r = severi_weight(spec, WeightFunction::zero(p), true);
  EXPECT_TRUE(r.assumed_regular_point);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.l_V, 1);
  EXPECT_EQ(r.m_sev, 1);
  EXPECT_EQ(Rational(r.m_sev) * r.xi, Rational(r.mu));
}

TEST(Severi, NonIntegralWeight) {
  const auto p = LatticePolygon::simplex(1);
  const WeightFunction w(p, {Rational(1, 2), Rational(0), Rational(0)});
  EXPECT_THROW(severi_weight(SeveriSpec(p, 0), w), NotIntegral);
}

TEST(Severi, EdgeClassesJoinOppositeSidesOfParallelograms) {
  const auto p = LatticePolygon::from_vertices({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  Rng rng(3);
  const auto s = concave_hull(p, separable_weight(rng, p)).subdivision;
  ASSERT_EQ(s.parallelograms().size(), 2u);
  // 7 edges: the three verticals form one class, the two tops and bottoms pair up.
  const auto classes = edge_equivalence_classes(s);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 2, 3}));
}

TEST(SeveriProperty, MultiplicityIdentityOnEnumeratedSubdivisions) {
  Rng rng(81);
  int checked = 0;
  while (checked < 100) {
    const auto p = random_polygon(rng, 3, 8);
    const std::size_t delta = static_cast<std::size_t>(uniform(rng, 0, 2));
    if (delta + 2 > p.lattice_points().size()) continue;
    for (const auto& s : simple_nodal_subdivisions(p, delta)) {
      const auto m = severi_multiplicities(s);
      EXPECT_EQ(Rational(m.m_sev) * m.xi, Rational(m.mu));
      Integer mu = 1;
      for (const auto& f : s.faces())
        if (f.size() == 3) mu *= oracle::twice_area(oracle::hull(f.vertices()));
      EXPECT_EQ(m.mu, mu);
      ++checked;
    }
  }
}
