#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

namespace {

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& e : j)
      if (has_float(e)) return true;
  return false;
}

}  // namespace

TEST(Io, PolygonRoundTrip) {
  const auto p = polygon_from_json(Json::parse(R"({"vertices":[[0,0],[0,4],[2,2],[0,2]]})"));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(polygon_from_json(to_json(p)), p);
}

TEST(Io, WeightRoundTrip) {
  const auto p = LatticePolygon::simplex(1);
  const auto w = weight_from_json(p, Json::parse(R"({"values":[[0,0,"1/2"],[1,0,"-3"],[0,1,4]]})"));
  EXPECT_EQ(w(LatticePoint(0, 0)), Rational(1, 2));
  EXPECT_EQ(w(LatticePoint(0, 1)), Rational(4));
  EXPECT_EQ(weight_from_json(p, to_json(w)), w);
  EXPECT_EQ(to_json(w)["values"][0][2], "1/2");
}

TEST(Io, SubdivisionRoundTrip) {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_polygon(rng, 4, 16);
    const auto s = concave_hull(p, random_weight(rng, p)).subdivision;
    const auto j = to_json(s);
    EXPECT_EQ(subdivision_from_json(p, j), s);
    EXPECT_EQ(j["rank"], rank(s));
  }
}

TEST(Io, PolynomialAcceptsBothCoefficientForms) {
  const auto f = polynomial_from_json(Json::parse(R"({"terms":[
      {"a":[0,0],"coeff":[["1","0"],"0"]},
      {"a":[1,0],"coeff":[[["2","1/3"],"1/2"],[["5","0"],"-1"]]}]})"));
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(valuation(f.terms().at({1, 0})), Rational(1, 2));
  EXPECT_EQ(leading_coefficient(f.terms().at({1, 0})), GaussianRational(Rational(2), Rational(1, 3)));
  EXPECT_EQ(polynomial_from_json(to_json(f)).terms(), f.terms());
}

TEST(Io, CurveRoundTrip) {
  Rng rng(3);
  const auto p = random_polygon(rng, 3, 10);
  const auto c = dualize(p, random_weight(rng, p));
  const auto back = curve_from_json(Json::parse(dump_compact(to_json(c))));
  ASSERT_EQ(back.vertices.size(), c.vertices.size());
  EXPECT_EQ(back.vertices, c.vertices);
  EXPECT_EQ(back.edges.size(), c.edges.size());
  EXPECT_EQ(back.rays.size(), c.rays.size());
  EXPECT_TRUE(check_balancing(back));
  EXPECT_EQ(stable_intersect(back, c).total, stable_intersect(c, c).total);
}

TEST(Io, MalformedInputsAreSchemaErrors) {
  EXPECT_THROW(polygon_from_json(Json::parse(R"({"verts":[]})")), SchemaError);
  EXPECT_THROW(polygon_from_json(Json::parse(R"({"vertices":[[0,0,1]]})")), SchemaError);
  EXPECT_THROW(polygon_from_json(Json::parse(R"({"vertices":[[0,"1/2"],[1,0],[0,1]]})")), SchemaError);
  EXPECT_THROW(polygon_from_json(Json::parse(R"({"vertices":[[0,0.5],[1,0],[0,1]]})")), SchemaError);
  const auto p = LatticePolygon::simplex(1);
  EXPECT_THROW(weight_from_json(p, Json::parse(R"({"values":[[0,0,"1/0"],[1,0,"0"],[0,1,"0"]]})")), SchemaError);
  EXPECT_THROW(weight_from_json(p, Json::parse(R"({"values":[[0,0,"x"],[1,0,"0"],[0,1,"0"]]})")), SchemaError);
  EXPECT_THROW(weight_from_json(p, Json::parse(R"({"values":[[0,0,"1"]]})")), IncompleteWeight);
  EXPECT_THROW(curve_from_json(Json::parse(R"({"vertices":[["0","0"]],"edges":[],
      "rays":[{"from":3,"direction":[1,0],"weight":1}]})")), SchemaError);
  EXPECT_THROW(strategy_from_string("fast"), SchemaError);
}

TEST(Io, ReportsCarryNoFloats) {
  const auto p = LatticePolygon::simplex(2);
  const auto report = count_severi_degree(SeveriSpec(p, 1), 1, CountStrategy::Both);
  EXPECT_FALSE(has_float(to_json(report)));
  EXPECT_FALSE(has_float(to_json(build_matrix(report.solutions[0].subdivision))));
}

TEST(Io, CompactDumpParsesBack) {
  const Json j = Json::parse(R"({"a":[[1,2],[3,4]],"b":{"c":[],"d":{}},"e":[{"f":"1/2"}],"g":[1,[2,3],4]})");
  EXPECT_EQ(Json::parse(dump_compact(j)), j);
  EXPECT_EQ(dump_compact(Json::parse("[[1, 2], [3, 4]]")), "[[1, 2], [3, 4]]\n");
}
