#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tropsev;

namespace {

IntegerMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, -range, range);
  return m;
}

Integer abs_det(const IntegerMatrix& m) { return abs(determinant(m)); }

void expect_smith(const IntegerMatrix& m) {
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.left * m * s.right, s.diag);
  EXPECT_EQ(abs_det(s.left), 1);
  EXPECT_EQ(abs_det(s.right), 1);
  for (std::size_t i = 0; i < s.diag.rows(); ++i)
    for (std::size_t j = 0; j < s.diag.cols(); ++j)
      if (i != j) EXPECT_EQ(s.diag(i, j), 0);
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    EXPECT_GE(s.diagonal[i], 0);
    if (s.diagonal[i] != 0) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
    else EXPECT_EQ(s.diagonal[i + 1], 0);
  }
  EXPECT_EQ(s.nonzero_product(), oracle::gcd_of_maximal_minors(m.to_rows()));
  EXPECT_EQ(s.rank(), oracle::rank(oracle::to_rational(m.to_rows())));
}

}  // namespace

TEST(Smith, BoundaryBinomialExample) {
  const IntegerMatrix m{{1, 2, -1, -2, 0, 0}, {1, 0, 0, 0, -1, 0}, {0, 0, -1, 2, 1, -2}};
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{1, 1, 2}));
  expect_smith(m);
}

TEST(Smith, EqualEntriesTerminate) {
  expect_smith(IntegerMatrix{{2, 2}, {2, 2}});
  expect_smith(IntegerMatrix{{2, 4}, {6, 8}});
  expect_smith(IntegerMatrix{{-3, 3, 3}, {3, -3, 6}});
}

TEST(Smith, ZeroAndEmpty) {
  const auto z = smith_normal_form(IntegerMatrix(2, 3));
  EXPECT_EQ(z.rank(), 0u);
  EXPECT_EQ(z.nonzero_product(), 1);
}

TEST(SmithProperty, RandomMatrices) {
  Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    const auto r = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto c = static_cast<std::size_t>(uniform(rng, 1, 5));
    expect_smith(random_matrix(rng, r, c, i % 3 == 0 ? 2 : 9));
  }
}

TEST(MatrixProperty, DeterminantMatchesCofactors) {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const auto m = random_matrix(rng, n, n, 6);
    EXPECT_EQ(determinant(m), oracle::det(m.to_rows()));
  }
}

TEST(Matrix, SolveAffine) {
  // x + y = 2, x - y = 0 -> (1, 1)
  RationalMatrix aug{{Rational(1), Rational(1), Rational(2)}, {Rational(1), Rational(-1), Rational(0)}};
  const auto sol = solve_affine(aug, 2);
  ASSERT_TRUE(sol.consistent);
  EXPECT_TRUE(sol.basis.empty());
  EXPECT_EQ(sol.origin, (RationalRow{Rational(1), Rational(1)}));
  RationalMatrix bad{{Rational(1), Rational(1), Rational(2)}, {Rational(2), Rational(2), Rational(5)}};
  EXPECT_FALSE(solve_affine(bad, 2).consistent);
}
