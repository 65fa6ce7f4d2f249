#include <gtest/gtest.h>

#include "support.hpp"
#include "tvp/error.hpp"
#include "tvp/minnorm.hpp"

using namespace tvp;
using namespace tvp::test;

namespace {

void expect_result(const MinNormResult& r, std::span<const Vector> pts, const Vector& z, const Rational& dist) {
  EXPECT_EQ(r.point, z);
  EXPECT_EQ(r.distance_sq, dist);
  EXPECT_EQ(r.combination.value, z);
  EXPECT_TRUE(is_valid_combination(r.combination, pts));
  EXPECT_TRUE(satisfies_optimality(r, pts));
}

}  // namespace

TEST(MinNormPoint, SegmentRightOfOrigin) {
  std::vector<Vector> pts{vec({2}), vec({3})};
  expect_result(min_norm_point(pts), pts, vec({2}), q("4"));
  expect_result(min_norm_bruteforce(pts), pts, vec({2}), q("4"));
}

TEST(MinNormPoint, SymmetricSegment) {
  std::vector<Vector> pts{vec({-1}), vec({1})};
  for (const auto& r : {min_norm_point(pts), min_norm_bruteforce(pts)}) {
    expect_result(r, pts, vec({0}), q("0"));
    EXPECT_EQ(r.combination.dense(2), rats({"1/2", "1/2"}));
  }
}

TEST(MinNormPoint, ProjectOntoVerticalSegment) {
  std::vector<Vector> pts{vec({1, 1}), vec({1, -1})};
  for (const auto& r : {min_norm_point(pts), min_norm_bruteforce(pts)}) {
    expect_result(r, pts, vec({1, 0}), q("1"));
    EXPECT_EQ(r.combination.dense(2), rats({"1/2", "1/2"}));
  }
}

TEST(MinNormBruteforce, SquareCornersContainOrigin) {
  std::vector<Vector> pts{vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})};
  expect_result(min_norm_bruteforce(pts), pts, vec({0, 0}), q("0"));
  expect_result(min_norm_point(pts), pts, vec({0, 0}), q("0"));
}

TEST(MinNormBruteforce, DiagonalSegment) {
  std::vector<Vector> pts{vec({1, 0}), vec({0, 1})};
  expect_result(min_norm_bruteforce(pts), pts, vecq({"1/2", "1/2"}), q("1/2"));
  expect_result(min_norm_point(pts), pts, vecq({"1/2", "1/2"}), q("1/2"));
}

TEST(MinNormPoint, DimensionMismatch) {
  std::vector<Vector> pts{vec({1, 0}), vec({0})};
  EXPECT_THROW(min_norm_point(pts), DimensionError);
  EXPECT_THROW(min_norm_bruteforce(pts), DimensionError);
}

TEST(MinNormPoint, DuplicatesAndDegenerateInputs) {
  std::vector<Vector> pts{vec({2, 2}), vec({2, 2}), vec({4, 4}), vec({2, 2})};
  auto r = min_norm_point(pts);
  expect_result(r, pts, vec({2, 2}), q("8"));
  std::vector<Vector> zero_dim{Vector{}, Vector{}};
  EXPECT_EQ(min_norm_point(zero_dim).distance_sq, q("0"));
}

TEST(MinNormPoint, AgreesWithBruteForce) {
  Gen g(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t m = static_cast<std::size_t>(g.integer(1, 10));
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < m; ++i) pts.push_back(g.vector(n, -20, 20));
    auto fast = min_norm_point(pts);
    auto slow = min_norm_bruteforce(pts);
    ASSERT_EQ(fast.distance_sq, slow.distance_sq) << "trial " << trial;
    EXPECT_EQ(fast.point, slow.point);
    EXPECT_TRUE(satisfies_optimality(fast, pts));
    EXPECT_TRUE(satisfies_optimality(slow, pts));
    EXPECT_TRUE(is_valid_combination(fast.combination, pts));
    EXPECT_TRUE(is_valid_combination(slow.combination, pts));
  }
}

TEST(MinNormPoint, ScalingScalesDistanceSquared) {
  Gen g(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    std::vector<Vector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(g.vector(n, -10, 10));
    Rational s(g.integer(1, 9), g.integer(1, 9));
    std::vector<Vector> scaled;
    for (const auto& v : pts) scaled.push_back(s * v);
    auto a = min_norm_point(pts);
    auto b = min_norm_point(scaled);
    EXPECT_EQ(b.distance_sq, s * s * a.distance_sq);
    EXPECT_EQ(b.point, s * a.point);
  }
}

TEST(PointInHull, Midpoint) {
  std::vector<Vector> pts{vec({0}), vec({2})};
  auto w = point_in_hull(vec({1}), pts);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->dense(2), rats({"1/2", "1/2"}));
}

TEST(PointInHull, OutsideSegment) {
  std::vector<Vector> pts{vec({0}), vec({2})};
  EXPECT_FALSE(point_in_hull(vec({3}), pts));
}

TEST(PointInHull, SquareCenter) {
  std::vector<Vector> pts{vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})};
  auto w = point_in_hull(vecq({"1/2", "1/2"}), pts);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->dense(4), rats({"1/2", "0", "0", "1/2"}));
  EXPECT_EQ(combine(pts, w->indices, w->weights), vecq({"1/2", "1/2"}));
}

TEST(PointInHull, RecombinationReproducesQuery) {
  Gen g(8);
  int inside = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    std::vector<Vector> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(g.vector(n, -5, 5));
    Vector query = g.vector(n, -3, 3);
    auto w = point_in_hull(query, pts);
    auto slow = min_norm_bruteforce([&] {
      std::vector<Vector> shifted;
      for (const auto& v : pts) shifted.push_back(v - query);
      return shifted;
    }());
    EXPECT_EQ(w.has_value(), slow.distance_sq.is_zero());
    if (w) {
      ++inside;
      EXPECT_TRUE(is_valid_combination(*w, pts));
      EXPECT_EQ(w->value, query);
    }
  }
  EXPECT_GT(inside, 0);
}
