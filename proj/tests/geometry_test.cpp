// Copyright 2026 The compss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "compss/error.hpp"
#include "compss/geometry.hpp"
#include "oracles.hpp"

namespace compss {
namespace {

const Polygon kUnitSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

TEST(Geometry, AreaPerimeterCentroid) {
  EXPECT_DOUBLE_EQ(signed_area(kUnitSquare), 1.0);
  EXPECT_DOUBLE_EQ(perimeter(kUnitSquare), 4.0);
  const Vec2 c = centroid(kUnitSquare);
  EXPECT_DOUBLE_EQ(c.x, 0.5);
  EXPECT_DOUBLE_EQ(c.y, 0.5);
  Polygon cw(kUnitSquare.rbegin(), kUnitSquare.rend());
  EXPECT_DOUBLE_EQ(signed_area(cw), -1.0);
  EXPECT_GT(signed_area(to_ccw(cw)), 0.0);
}

TEST(Geometry, ConvexityAndSimplicity) {
  EXPECT_TRUE(is_convex(kUnitSquare));
  EXPECT_TRUE(is_simple(kUnitSquare));
  const Polygon bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  EXPECT_FALSE(is_simple(bowtie));
  const Polygon ell{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  EXPECT_TRUE(is_simple(ell));
  EXPECT_FALSE(is_convex(ell));
}

TEST(Geometry, LocatePoint) {
  EXPECT_EQ(locate_point({0.5, 0.5}, kUnitSquare), Containment::kInside);
  EXPECT_EQ(locate_point({1.5, 0.5}, kUnitSquare), Containment::kOutside);
  EXPECT_EQ(locate_point({1.0, 0.5}, kUnitSquare), Containment::kOnBoundary);
  EXPECT_EQ(locate_point({0.0, 0.0}, kUnitSquare), Containment::kOnBoundary);
}

TEST(Geometry, LocatePointMatchesCrossingOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int trial = 0; trial < 20; ++trial) {
    const Polygon poly = oracle::random_convex(rng, 7);
    for (int k = 0; k < 200; ++k) {
      const Vec2 p{u(rng), u(rng)};
      const Containment c = locate_point(p, poly, 0.0);
      if (c == Containment::kOnBoundary) continue;
      EXPECT_EQ(c == Containment::kInside, oracle::inside(p, poly));
    }
  }
}

TEST(Geometry, SegmentDistances) {
  Vec2 closest;
  EXPECT_DOUBLE_EQ(point_segment_distance({0.5, 2}, {0, 0}, {1, 0}, &closest), 2.0);
  EXPECT_DOUBLE_EQ(closest.x, 0.5);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
  EXPECT_TRUE(segments_intersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  EXPECT_DOUBLE_EQ(segment_segment_distance({0, 0}, {1, 0}, {0, 1}, {1, 1}).distance, 1.0);
  EXPECT_DOUBLE_EQ(segment_segment_distance({0, 0}, {1, 1}, {0, 1}, {1, 0}).distance, 0.0);
}

TEST(Geometry, PolygonDistanceMatchesAllSegmentPairs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> shift(2.0, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon p = oracle::random_convex(rng, 5);
    Polygon q = oracle::random_convex(rng, 6);
    const double dx = shift(rng), dy = shift(rng) - 4.0;
    for (Vec2& v : q) v = v + Vec2{dx, dy};
    const ClosestPair cp = polygon_distance(p, q);
    const double expected = oracle::polygon_gap(p, q);
    if (expected == 0.0) continue;
    EXPECT_NEAR(cp.distance, expected, 1e-12);
    EXPECT_NEAR(distance(cp.a, cp.b), cp.distance, 1e-12);
  }
}

TEST(Geometry, PolygonDistanceTouching) {
  const Polygon a{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Polygon b{{1, 0}, {2, 0}, {2, 1}, {1, 1}};
  EXPECT_EQ(polygon_distance(a, b).distance, 0.0);
}

TEST(Geometry, DiameterMatchesAllPairs) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec2> pts(3 + trial % 40);
    for (Vec2& p : pts) p = {u(rng), u(rng)};
    const Diameter d = polygon_diameter(pts);
    EXPECT_NEAR(d.length, oracle::diameter(pts), 1e-12);
    EXPECT_NEAR(distance(d.a, d.b), d.length, 1e-12);
  }
  EXPECT_DOUBLE_EQ(polygon_diameter(kUnitSquare).length, std::sqrt(2.0));
}

TEST(Geometry, ConvexHullContainsAllPoints) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec2> pts(300);
  for (Vec2& p : pts) p = {u(rng), u(rng)};
  const auto hull = convex_hull(pts);
  EXPECT_TRUE(is_convex(hull));
  EXPECT_GT(signed_area(hull), 0.0);
  for (Vec2 p : pts) EXPECT_NE(locate_point(p, hull), Containment::kOutside);
}

TEST(Geometry, ChebyshevCenterExamples) {
  const Circle sq = chebyshev_center(kUnitSquare);
  EXPECT_NEAR(sq.radius, 0.5, 1e-12);
  EXPECT_NEAR(sq.center.x, 0.5, 1e-12);
  EXPECT_NEAR(sq.center.y, 0.5, 1e-12);
  const Polygon tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  EXPECT_NEAR(chebyshev_center(tri).radius, 1.0 / (2.0 * std::sqrt(3.0)), 1e-12);
  const Polygon strip{{0, 0}, {10, 0}, {10, 1}, {0, 1}};
  EXPECT_NEAR(chebyshev_center(strip).radius, 0.5, 1e-12);
}

TEST(Geometry, ChebyshevCenterMatchesTripleEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Polygon p = to_ccw(convex_hull(oracle::random_convex(rng, 3 + trial % 9)));
    if (p.size() < 3) continue;
    const Circle c = chebyshev_center(p);
    EXPECT_NEAR(c.radius, oracle::inradius(p), 1e-9);
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_GE(point_segment_distance(c.center, p[i], p[(i + 1) % p.size()]), c.radius - 1e-9);
    }
  }
}

TEST(Geometry, ChebyshevCenterRejectsDegenerate) {
  EXPECT_THROW(chebyshev_center(Polygon{{0, 0}, {1, 0}}), DomainError);
}

}  // namespace
}  // namespace compss
