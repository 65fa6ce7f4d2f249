#include <gtest/gtest.h>

#include "support.hpp"
#include "tvp/certify.hpp"
#include "tvp/error.hpp"
#include "tvp/radon.hpp"

using namespace tvp;
using namespace tvp::test;

TEST(RadonPartition, CollinearTriple) {
  auto pts = points_1d({0, 1, 2});
  auto c = radon_partition(pts);
  EXPECT_EQ(c.group1, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(c.group2, (std::vector<std::size_t>{1}));
  EXPECT_EQ(c.weights, rats({"1/2", "1", "1/2"}));
  EXPECT_EQ(c.common_point, pt({1}));
  EXPECT_TRUE(verify_radon(pts, c).valid);
}

TEST(RadonPartition, UnitSquareDiagonals) {
  std::vector<Point> pts{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  auto c = radon_partition(pts);
  EXPECT_EQ(c.group1, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(c.group2, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(c.weights, rats({"1/2", "1/2", "1/2", "1/2"}));
  EXPECT_EQ(c.common_point, Point{vecq({"1/2", "1/2"})});

  // Independent check: the diagonal split is among the bipartitions the oracle accepts.
  auto all = brute_force_tverberg(pts, 2);
  Partition diag{{0, 3}, {1, 2}};
  EXPECT_NE(std::find(all.begin(), all.end(), diag), all.end());
}

TEST(RadonPartition, DuplicatePairSplit) {
  auto pts = points_1d({0, 0, 5});
  auto c = radon_partition(pts);
  // mu = (-1, 1, 0): the copies land on opposite sides; index 2 joins group1 with weight 0.
  EXPECT_EQ(c.group1, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(c.group2, (std::vector<std::size_t>{0}));
  EXPECT_EQ(c.weights, rats({"1", "1", "0"}));
  EXPECT_EQ(c.common_point, pt({0}));
  EXPECT_TRUE(verify_radon(pts, c).valid);
}

TEST(RadonPartition, WrongCount) {
  EXPECT_THROW(radon_partition(points_1d({0, 1})), SizeError);
  EXPECT_THROW(radon_partition(points_1d({0, 1, 2, 3})), SizeError);
  EXPECT_THROW(radon_partition(std::vector<Point>{}), SizeError);
  std::vector<Point> mixed{pt({0, 0}), pt({1, 0}), pt({0}), pt({1, 1})};
  EXPECT_THROW(radon_partition(mixed), DimensionError);
}

TEST(RadonPartition, ZeroDimensional) {
  std::vector<Point> pts{Point{}, Point{}};
  auto c = radon_partition(pts);
  EXPECT_TRUE(verify_radon(pts, c).valid);
}

TEST(RadonPartition, RandomInputsVerify) {
  Gen g(555);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 4));
    auto pts = g.points(d + 2, d, -100, 100);
    if (g.chance(0.2)) g.duplicate_some(pts);
    auto c = radon_partition(pts);
    auto report = verify_radon(pts, c);
    EXPECT_TRUE(report.valid) << report.render();
    EXPECT_FALSE(c.group1.empty());
    EXPECT_FALSE(c.group2.empty());
    EXPECT_EQ(c, radon_partition(pts));
  }
}
