#include <gtest/gtest.h>

#include "support.hpp"
#include "toriccap/error.hpp"

namespace toriccap {
namespace {

TEST(Capacities, GuttHutchingsMatchesEnumeration) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    RationalPolytope omega = testing::random_domain(rng);
    for (int k = 1; k <= 12; ++k) EXPECT_EQ(gh_capacity(omega, k), testing::naive_gh(omega, k));
  }
}

TEST(Capacities, GuttHutchingsInFourDimensions) {
  VertexSet box{4, {{0, 0, 0, 0}, {1, 2, 3, 4}}};
  // All weight on the first coordinate.
  EXPECT_EQ(gh_capacity(box, 3), 3);
  EXPECT_THROW(gh_capacity(VertexSet{5, {{0, 0, 0, 0, 0}}}, 1), Error);
}

TEST(Capacities, SlopeAgreesWithBoxSearch) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    RationalPolytope omega = testing::random_domain(rng);
    EXPECT_EQ(asymptotic_slope(omega).slope, asymptotic_slope_box(omega, 12).slope);
  }
  auto sq = RationalPolytope::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(asymptotic_slope(sq).slope, make_rational(1, 2));
  auto tri = RationalPolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(asymptotic_slope(tri).slope, make_rational(1, 3));
}

TEST(Capacities, GromovWidth) {
  auto rect = RationalPolytope::from_vertices({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
  EXPECT_EQ(gromov_width(rect), 2);
  auto slanted = RationalPolytope::from_vertices({{0, 0}, {1, 0}, {2, 1}, {0, 1}});
  EXPECT_THROW(gromov_width(slanted), Error);
}

TEST(Capacities, IntervalForExampleRegion) {
  auto omega = RationalPolytope::from_vertices({{0, 0}, {1, 0}, {make_rational(3, 4), 1}, {0, 1}});
  RsftInterval one = rsft_interval(omega, TangencyConstraint({{0}}, 4));
  EXPECT_EQ(one.k, 1);
  EXPECT_EQ(one.lower, 1);
  EXPECT_EQ(*one.upper, 1);
  EXPECT_TRUE(one.exact);
  EXPECT_EQ(*one.stable_upper, 1);
  RsftInterval non_lax = rsft_interval(omega, TangencyConstraint({{0, 0}}, 4));
  EXPECT_EQ(non_lax.k, 2);
  EXPECT_EQ(non_lax.lower, make_rational(7, 4));
  EXPECT_FALSE(non_lax.upper.has_value());
  EXPECT_TRUE(non_lax.non_lax_warning);
  EXPECT_THROW(rsft_interval(omega, TangencyConstraint({{0}}, 6)), Error);
}

TEST(Capacities, IntervalForRectangle) {
  auto rect = RationalPolytope::from_vertices({{0, 0}, {1, 0}, {1, 2}, {0, 2}});
  RsftInterval iv = rsft_interval(rect, TangencyConstraint({{0}, {0}}, 4));
  EXPECT_EQ(iv.k, 2);
  EXPECT_EQ(iv.lower, 2);
  EXPECT_EQ(*iv.upper, 3);
  EXPECT_FALSE(iv.exact);
  EXPECT_FALSE(iv.stable_upper.has_value());
}

TEST(Capacities, ReportsAreOrderedAndSandwiched) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    RationalPolytope omega = testing::random_domain(rng);
    auto rows = capacity_reports(omega, 10);
    ASSERT_EQ(rows.size(), 10u);
    for (int k = 1; k <= 10; ++k) {
      EXPECT_EQ(rows[k - 1].k, k);
      EXPECT_LE(rows[k - 1].lk, rows[k - 1].uk);
      EXPECT_LE(rows[k - 1].lk, rows[k - 1].gh);
    }
  }
}

}  // namespace
}  // namespace toriccap
