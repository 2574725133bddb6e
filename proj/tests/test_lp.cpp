#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

namespace {

RationalRow row(std::initializer_list<long> v) {
  RationalRow r;
  for (long x : v) r.emplace_back(x);
  return r;
}

bool satisfies(const LinearSystem& sys, const RationalRow& x) {
  for (const auto& c : sys.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
    switch (c.relation) {
      case Relation::Equal: if (lhs != c.rhs) return false; break;
      case Relation::GreaterEqual: if (lhs < c.rhs) return false; break;
      case Relation::Greater: if (lhs <= c.rhs) return false; break;
    }
  }
  return true;
}

LinearSystem random_system(Rng& rng, std::size_t vars) {
  LinearSystem sys(vars);
  const long k = uniform(rng, 1, 6);
  for (long i = 0; i < k; ++i) {
    RationalRow c;
    for (std::size_t j = 0; j < vars; ++j) c.emplace_back(uniform(rng, -3, 3));
    const Rational rhs(uniform(rng, -4, 4));
    const long rel = uniform(rng, 0, 5);
    if (rel == 0) sys.add_equal(std::move(c), rhs);
    else if (rel < 3) sys.add_greater_equal(std::move(c), rhs);
    else sys.add_greater(std::move(c), rhs);
  }
  return sys;
}

}  // namespace

TEST(Lp, StrictnessMatters) {
  LinearSystem a(1);
  a.add_greater_equal(row({1}), 0);
  a.add_greater_equal(row({-1}), 0);
  EXPECT_TRUE(rational_lp_feasible(a).feasible);
  LinearSystem b(1);
  b.add_greater(row({1}), 0);
  b.add_greater_equal(row({-1}), 0);
  EXPECT_FALSE(rational_lp_feasible(b).feasible);
  EXPECT_FALSE(rational_lp_feasible(b, LpMethod::FourierMotzkin).feasible);
}

TEST(Lp, InconsistentEqualities) {
  LinearSystem s(2);
  s.add_equal(row({1, 1}), 1);
  s.add_equal(row({2, 2}), 3);
  EXPECT_FALSE(rational_lp_feasible(s).feasible);
}

TEST(Lp, WitnessOfOpenTriangle) {
  LinearSystem s(2);
  s.add_greater(row({1, 0}), 0);
  s.add_greater(row({0, 1}), 0);
  s.add_less(row({1, 1}), 1);
  const auto r = rational_lp_feasible(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(satisfies(s, r.witness));
}

TEST(LpProperty, SimplexAgreesWithEliminationAndWitnessesHold) {
  Rng rng(31);
  int feasible = 0;
  for (int i = 0; i < 300; ++i) {
    const auto sys = random_system(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
    const auto a = rational_lp_feasible(sys, LpMethod::Simplex);
    const auto b = rational_lp_feasible(sys, LpMethod::FourierMotzkin);
    ASSERT_EQ(a.feasible, b.feasible) << "instance " << i;
    if (a.feasible) {
      ++feasible;
      EXPECT_TRUE(satisfies(sys, a.witness));
      EXPECT_TRUE(satisfies(sys, b.witness));
    }
  }
  EXPECT_GT(feasible, 50);
  EXPECT_LT(feasible, 300);
}

TEST(LpProperty, GuidedClosureAgreesWithExact) {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto vars = static_cast<std::size_t>(uniform(rng, 1, 4));
    const long k = uniform(rng, 1, 7);
    std::vector<RationalRow> coeffs;
    std::vector<Rational> constants;
    std::vector<std::vector<double>> approx;
    std::vector<ParamInequality> ineqs;
    for (long r = 0; r < k; ++r) {
      RationalRow c;
      for (std::size_t j = 0; j < vars; ++j) c.emplace_back(uniform(rng, -3, 3), uniform(rng, 1, 3));
      const Rational h(uniform(rng, -5, 5));
      ineqs.push_back({c, -h, false});
      std::vector<double> d;
      for (const auto& x : c) d.push_back(x.get_d());
      d.push_back(h.get_d());
      coeffs.push_back(std::move(c));
      constants.push_back(h);
      approx.push_back(std::move(d));
    }
    std::vector<GuidedRow> rows;
    for (long r = 0; r < k; ++r) rows.push_back({&coeffs[r], &constants[r], &approx[r]});
    EXPECT_EQ(closure_feasible_guided(vars, rows), closure_feasible(vars, ineqs)) << "instance " << i;

    RationalRow e;
    for (std::size_t j = 0; j < vars; ++j) e.emplace_back(uniform(rng, -2, 2));
    const Rational rhs(uniform(rng, -3, 3));
    EXPECT_EQ(closure_feasible_guided(vars, rows, &e, &rhs), closure_feasible(vars, ineqs, {{e, rhs, false}}))
        << "instance " << i << " with equality";
  }
}
