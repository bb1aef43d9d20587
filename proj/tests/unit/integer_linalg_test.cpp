#include <gtest/gtest.h>

#include "pms/integer_linalg.hpp"

namespace pms {
namespace {

TEST(Rank, SmallMatrices) {
  EXPECT_EQ(rank({{1, 0}, {0, 1}, {1, 1}}), 2);
  EXPECT_EQ(rank({{2, 4}, {1, 2}}), 1);
  EXPECT_EQ(rank({}), 0);
  EXPECT_EQ(affine_rank({{0, 0}, {1, 1}, {2, 2}}), 1);
  EXPECT_EQ(affine_rank({{3, 1}}), 0);
  EXPECT_EQ(affine_rank({}), -1);
}

TEST(Rank, SurvivesInt64Overflow) {
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<IntVec> rows = {{big, 1, 0}, {1, big, 1}, {0, 1, big}, {big, big + 1, 1}};
  EXPECT_EQ(rank(rows), 3);
  auto idx = independent_rows(rows);
  EXPECT_EQ(idx.size(), 3u);
}

TEST(Hermite, CoordinatesAndMembership) {
  // Lattice spanned by (2,0) and (1,1): index 2 in Z^2.
  HermiteBasis h = hermite_normal_form({{2, 0}, {1, 1}, {3, 1}}, 2);
  EXPECT_EQ(h.rank(), 2);
  EXPECT_TRUE(h.contains({4, 2}));
  EXPECT_TRUE(h.contains({3, 1}));
  EXPECT_FALSE(h.contains({1, 0}));
  auto y = h.coordinates({5, 3});
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(h.combine(*y), (IntVec{5, 3}));
}

TEST(Hermite, LowerRankLattice) {
  HermiteBasis h = hermite_normal_form({{1, 1, 0}, {2, 2, 0}}, 3);
  EXPECT_EQ(h.rank(), 1);
  EXPECT_TRUE(h.contains({-3, -3, 0}));
  EXPECT_FALSE(h.contains({1, 0, 0}));
}

TEST(Arithmetic, GcdDotSolve) {
  EXPECT_EQ(gcd_of({6, -4, 10}), 2);
  EXPECT_EQ(gcd_of({0, 0}), 0);
  EXPECT_EQ(dot({1, 2, 3}, {4, 5, 6}), 32);
  auto x = solve_rational({{2, 1}, {1, 3}}, {Rational(3), Rational(5)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(4, 5));
  EXPECT_EQ((*x)[1], Rational(7, 5));
  EXPECT_FALSE(solve_rational({{1, 1}, {1, 1}}, {Rational(1), Rational(2)}).has_value());
}

}  // namespace
}  // namespace pms
