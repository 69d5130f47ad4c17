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

#include <algorithm>
#include <cmath>
#include <random>

#include "compss/error.hpp"
#include "compss/metrics.hpp"
#include "oracles.hpp"

namespace compss {
namespace {

const Polygon kUnitSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
const Polygon kTriangle{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};

Scene carpet(int d) { return generate_scene(build_preset("sierpinski-carpet"), d); }
Scene gasket(int d) { return generate_scene(build_preset("sierpinski-gasket"), d); }

// ---------------------------------------------------------------------------
// Shape

TEST(Shape, Examples) {
  const ShapeMetrics sq = shape_metrics(kUnitSquare);
  EXPECT_NEAR(sq.diameter, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(sq.inradius, 0.5, 1e-12);
  EXPECT_NEAR(sq.roundness, 1.0 / (2.0 * std::sqrt(2.0)), 1e-12);
  EXPECT_EQ(sq.inradius_error, 0.0);
  const ShapeMetrics tri = shape_metrics(kTriangle);
  EXPECT_NEAR(tri.diameter, 1.0, 1e-12);
  EXPECT_NEAR(tri.inradius, 1.0 / (2.0 * std::sqrt(3.0)), 1e-12);
}

TEST(Shape, CarpetRoundnessAtEveryGeneration) {
  for (const Component& c : carpet(3).components) {
    EXPECT_NEAR(shape_metrics(c).roundness, 1.0 / (2.0 * std::sqrt(2.0)), 1e-9);
  }
}

TEST(Shape, NonConvexWithinErrorBound) {
  // L-shape with unit-width arms: the largest disk sits in the outer corner,
  // touching both outer walls and the reflex vertex (1, 1): r = 2 - sqrt(2).
  const Polygon ell{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  const ShapeMetrics m = shape_metrics(ell);
  EXPECT_FALSE(m.convex);
  EXPECT_GT(m.inradius_error, 0.0);
  EXPECT_NEAR(m.inradius, 2.0 - std::sqrt(2.0), m.inradius_error);
  EXPECT_LE(m.inradius, m.diameter / 2);
}

TEST(Shape, InradiusAtMostHalfDiameter) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const Polygon p = to_ccw(convex_hull(oracle::random_convex(rng, 8)));
    const ShapeMetrics m = shape_metrics(p);
    EXPECT_GT(m.inradius, 0.0);
    EXPECT_LE(m.inradius, m.diameter / 2 + 1e-12);
    EXPECT_NEAR(m.diameter, oracle::diameter(p), 1e-12);
  }
}

TEST(Shape, DegenerateRejected) {
  EXPECT_THROW(shape_metrics(Polygon{{0, 0}, {1, 0}, {2, 0}}), DomainError);
}

// ---------------------------------------------------------------------------
// Separation

TEST(Separation, TwoUnitSquaresGapOne) {
  const Scene s = scene_from_polygons({kUnitSquare, {{2, 0}, {3, 0}, {3, 1}, {2, 1}}});
  const SeparationReport r = separation_constant(s);
  EXPECT_FALSE(r.unbounded);
  EXPECT_NEAR(r.constant, std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(r.min_gap, 1.0);
}

TEST(Separation, CarpetIsSqrtTwoWithAdjacentGenerationWitness) {
  for (int d = 2; d <= 4; ++d) {
    const Scene s = carpet(d);
    const SeparationReport r = separation_constant(s);
    EXPECT_FALSE(r.unbounded);
    EXPECT_NEAR(r.constant, std::sqrt(2.0), 1e-9);
    const int ga = s.components[r.witness.first].generation;
    const int gb = s.components[r.witness.second].generation;
    EXPECT_EQ(std::abs(ga - gb), 1);
    EXPECT_NEAR(r.witness_distance, distance(r.witness_points.a, r.witness_points.b), 1e-12);
  }
}

TEST(Separation, GasketTouches) {
  const SeparationReport r = separation_constant(gasket(2));
  EXPECT_TRUE(r.unbounded);
  EXPECT_LE(r.witness_distance, 1e-12);
  EXPECT_LE(r.min_gap, 1e-12);
}

TEST(Separation, MatchesAllPairsOracleOnRandomScenes) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  std::uniform_real_distribution<double> sz(0.05, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polygon> polys;
    while (polys.size() < 60) {
      const double x = u(rng), y = u(rng), a = sz(rng), b = sz(rng);
      Polygon p{{x, y}, {x + a, y}, {x + a, y + b}, {x, y + b}};
      bool clash = false;
      for (const Polygon& q : polys) clash = clash || oracle::polygon_gap(p, q) < 1e-3 || oracle::inside(p[0], q) || oracle::inside(q[0], p);
      if (!clash) polys.push_back(p);
    }
    const Scene s = scene_from_polygons(polys);
    const SeparationReport r = separation_constant(s);
    const oracle::Separation o = oracle::separation(s);
    EXPECT_EQ(r.unbounded, o.unbounded);
    EXPECT_NEAR(r.constant, o.constant, 1e-12 * o.constant);
    EXPECT_EQ(r.witness, o.witness) << "trial " << trial;
  }
}

TEST(Separation, NeedsTwoComponents) {
  EXPECT_THROW(separation_constant(carpet(1)), DomainError);
}

// ---------------------------------------------------------------------------
// Radial constants

TEST(Radial, DefaultScales) {
  const Scene c = carpet(3);
  const auto s = default_scales(build_preset("sierpinski-carpet"), c, 8.0 / 729);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s[0], 1.0 / 3, 1e-15);
  EXPECT_NEAR(s[2], 1.0 / 27, 1e-15);
  const auto g = default_scales(build_preset("sierpinski-gasket"), gasket(3), 8.0 / 729);
  EXPECT_NEAR(g[0], 0.5, 1e-15);
  EXPECT_NEAR(g[2], 0.125, 1e-15);
  // The raster floor drops scales that are too small.
  EXPECT_EQ(default_scales(build_preset("sierpinski-carpet"), c, 0.05).size(), 2u);
}

TEST(Radial, PorosityOfSegmentApproachesOne) {
  Scene s = scene_from_polygons({});
  s.boundary = {Polyline{{{-4, 0}, {4, 0}}, false}};
  s.bounds = Box{{-4, -4}, {4, 4}};
  for (double res : {32.0, 64.0}) {
    const std::vector<double> scales{1.0};
    const Grid g = rasterize(s.boundary, s.bounds, res, porosity_raster_options(scales, res));
    const RadialConstant p = porosity_constant(s, distance_to_set(g), scales);
    EXPECT_NEAR(p.value, 1.0, 2.0 / res);
    EXPECT_LE(p.value, 1.0 + 1e-12);
  }
}

TEST(Radial, PorosityRejectsBadScalesAndShallowGrids) {
  const Scene s = carpet(2);
  const double res = 81.0;
  const std::vector<double> ok{1.0 / 3};
  const DistanceField f = distance_to_set(rasterize(s, res, porosity_raster_options(ok, res)));
  EXPECT_NO_THROW(porosity_constant(s, f, ok));
  EXPECT_THROW(porosity_constant(s, f, std::vector<double>{4.0 / res}), BoundsError);
  EXPECT_THROW(porosity_constant(s, f, std::vector<double>{}), DomainError);
  const DistanceField tight = distance_to_set(rasterize(s, res));
  EXPECT_THROW(porosity_constant(s, tight, ok), BoundsError);
}

TEST(Radial, PorosityMatchesBruteForceBallScan) {
  const Scene s = gasket(3);
  const double res = 96.0;
  const std::vector<double> scales{0.5, 0.25};
  const Grid grid = rasterize(s, res, porosity_raster_options(scales, res));
  const DistanceField f = distance_to_set(grid);
  const RadialConstant p = porosity_constant(s, f, scales);
  const auto samples = boundary_samples(s, 0.5 / res);
  double best = std::numeric_limits<double>::infinity();
  for (double r : scales) {
    for (Vec2 x : samples) {
      double mx = 0.0;
      for (int j = 0; j < f.geom.height; ++j) {
        for (int i = 0; i < f.geom.width; ++i) {
          const Vec2 c = f.geom.center(i, j);
          if (distance(c, x) <= r * (1 + 1e-12)) mx = std::max(mx, f.distance(i, j));
        }
      }
      best = std::min(best, mx / r);
    }
  }
  EXPECT_DOUBLE_EQ(p.value, best);
  EXPECT_GT(p.value, 0.0);
}

TEST(Radial, ComponentInBallUnitSquare) {
  const Scene s = scene_from_polygons({kUnitSquare}, kUnitSquare);
  const RadialConstant c = component_in_ball_constant(s, std::vector<double>{0.5, 0.9});
  EXPECT_EQ(c.value, 0.0);
  EXPECT_EQ(c.qualitative_fraction, 0.0);
}

TEST(Radial, ComponentInBallMatchesBruteForce) {
  const Scene s = carpet(3);
  const std::vector<double> scales{1.0 / 3, 1.0 / 9};
  const RadialConstant c = component_in_ball_constant(s, scales);
  double best = std::numeric_limits<double>::infinity();
  for (double r : scales) {
    for (Vec2 x : boundary_samples(s, 0.0)) {
      double mx = 0.0;
      for (const Component& comp : s.components) {
        bool in = true;
        for (Vec2 v : comp.polygon) in = in && distance(v, x) <= r * (1 + 1e-12);
        if (in) mx = std::max(mx, oracle::diameter(comp.polygon) / r);
      }
      best = std::min(best, mx);
    }
  }
  EXPECT_NEAR(c.value, best, 1e-14 * best);
}

TEST(Radial, MonotoneInSampleSet) {
  const Scene s = carpet(3);
  const RadialConstant one = component_in_ball_constant(s, std::vector<double>{1.0 / 3});
  const RadialConstant two = component_in_ball_constant(s, std::vector<double>{1.0 / 3, 1.0 / 9});
  EXPECT_LE(two.value, one.value);
}

TEST(Radial, CarpetComponentInBallPositiveWhenDeepEnough) {
  const Scene s = carpet(4);
  const std::vector<double> scales{1.0 / 3, 1.0 / 9, 1.0 / 27};
  const RadialConstant c = component_in_ball_constant(s, scales);
  EXPECT_NEAR(c.value, std::sqrt(2.0) / 3, 1e-12);
  EXPECT_EQ(c.qualitative_fraction, 1.0);
}

// ---------------------------------------------------------------------------
// Paths

TEST(Path, Examples) {
  const PathReport sq = boundary_path_constant(kUnitSquare, 64);
  EXPECT_NEAR(sq.k, 2.0, 1e-6);
  EXPECT_NEAR(sq.geodesic, 2.0, 1e-9);
  EXPECT_NEAR(sq.chord, 1.0, 1e-9);
  // Vertex against the opposite midpoint gives sqrt(3), but two points at
  // equal distance t from a 60 degree corner give 2t / t, so k = 2.
  const PathReport tri = boundary_path_constant(kTriangle, 64);
  EXPECT_NEAR(tri.k, 2.0, 1e-9);
  const PathReport circle = boundary_path_constant(oracle::regular_polygon(256), 8);
  EXPECT_NEAR(circle.k, M_PI / 2, 1e-3);
}

TEST(Path, TriangleVertexToOppositeMidpointIsSqrtThree) {
  const Vec2 a = kTriangle[2];
  const Vec2 m = (kTriangle[0] + kTriangle[1]) * 0.5;
  const auto arc = boundary_geodesic(kTriangle, a, m);
  double len = 0.0;
  for (std::size_t q = 1; q < arc.size(); ++q) len += distance(arc[q - 1], arc[q]);
  EXPECT_NEAR(len / distance(a, m), std::sqrt(3.0), 1e-12);
}

TEST(Path, CornerRatioOracle) {
  // Points at distance t on both edges of a corner with interior angle a:
  // geodesic 2t, chord 2t sin(a/2). The supremum over a convex polygon is
  // at least 1 / sin(a_min / 2).
  for (int n : {3, 4, 5, 6, 8}) {
    const Polygon p = oracle::regular_polygon(n);
    const double angle = M_PI * (n - 2) / n;
    EXPECT_GE(boundary_path_constant(p, 64).k, 1.0 / std::sin(angle / 2) - 1e-9) << n;
  }
}

TEST(Path, WitnessAttainsK) {
  const PathReport r = boundary_path_constant(kTriangle, 16);
  EXPECT_NEAR(r.geodesic, r.k * distance(r.x, r.y), 1e-9);
  EXPECT_NEAR(r.chord, distance(r.x, r.y), 1e-12);
  EXPECT_GE(r.k, 1.0);
}

TEST(Path, GeodesicBoundsAllSampledPairs) {
  std::mt19937_64 rng(47);
  const Polygon p = to_ccw(convex_hull(oracle::random_convex(rng, 7)));
  const PathReport r = boundary_path_constant(p, 8);
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const std::size_t i = pick(rng), j = pick(rng);
    const Vec2 a = p[i] + (p[(i + 1) % p.size()] - p[i]) * (std::floor(t(rng) * 8) / 8);
    const Vec2 b = p[j] + (p[(j + 1) % p.size()] - p[j]) * (std::floor(t(rng) * 8) / 8);
    if (distance(a, b) < 1e-9) continue;
    const auto arc = boundary_geodesic(p, a, b);
    double len = 0.0;
    for (std::size_t q = 1; q < arc.size(); ++q) len += distance(arc[q - 1], arc[q]);
    EXPECT_LE(len, r.k * distance(a, b) * (1 + 1e-9));
  }
}

TEST(Path, ConvergenceCheck) {
  const PathConvergence c = path_constant_convergence(kUnitSquare, 32);
  EXPECT_TRUE(c.converged);
  EXPECT_LT(c.change, 1e-3);
  EXPECT_EQ(c.fine.samples_per_edge, 64);
}

TEST(Path, RejectsZeroSamples) {
  EXPECT_THROW(boundary_path_constant(kUnitSquare, 0), BoundsError);
}

TEST(Path, BoundaryGeodesicTakesShorterArc) {
  const auto arc = boundary_geodesic(kUnitSquare, {0.5, 0}, {1, 0.5});
  double len = 0.0;
  for (std::size_t q = 1; q < arc.size(); ++q) len += distance(arc[q - 1], arc[q]);
  EXPECT_NEAR(len, 1.0, 1e-12);
  EXPECT_EQ(arc.front(), (Vec2{0.5, 0}));
  EXPECT_EQ(arc.back(), (Vec2{1, 0.5}));
}

TEST(PushPath, ChordAcrossCentralSquare) {
  const Scene s = carpet(1);
  const Polyline chord{{{0.5, 1.0 / 3}, {0.5, 2.0 / 3}}, false};
  const PushedPath p = push_path_to_boundary(s, chord);
  EXPECT_NEAR(p.output_length, 2.0 * p.input_length, 1e-12);
  EXPECT_EQ(p.crossed, std::vector<int>{0});
  EXPECT_NEAR(p.k_max, 2.0, 1e-9);
}

TEST(PushPath, CornerClip) {
  const Scene s = carpet(1);
  const Polyline chord{{{0.4, 1.0 / 3}, {2.0 / 3, 0.6}}, false};
  const PushedPath p = push_path_to_boundary(s, chord);
  EXPECT_LE(p.output_length, std::sqrt(2.0) * p.input_length + 1e-12);
  EXPECT_EQ(p.path.points.front(), chord.points.front());
  EXPECT_EQ(p.path.points.back(), chord.points.back());
}

TEST(PushPath, PathOnEUnchanged) {
  const Scene s = carpet(1);
  const Polyline along{{{1.0 / 3, 1.0 / 3}, {2.0 / 3, 1.0 / 3}}, false};
  const PushedPath p = push_path_to_boundary(s, along);
  EXPECT_EQ(p.path.points, along.points);
  EXPECT_TRUE(p.crossed.empty());
}

TEST(PushPath, Errors) {
  const Scene s = carpet(1);
  EXPECT_THROW(push_path_to_boundary(s, Polyline{{{0.5, 0.5}, {0.5, 2.0 / 3}}, false}), DomainError);
  EXPECT_THROW(push_path_to_boundary(s, Polyline{{{0, 0}, {-0.5, 0.5}, {0, 1}}, false}), DomainError);
}

// ---------------------------------------------------------------------------
// Similarity and measure

TEST(Similarity, Examples) {
  EXPECT_EQ(similarity_classes(carpet(3)).classes.size(), 1u);
  EXPECT_EQ(similarity_classes(scene_from_polygons({kUnitSquare, {{3, 0}, {4, 0}, {3.5, std::sqrt(3.0) / 2}}}))
                .classes.size(),
            2u);
  const Polygon small{{5, 5}, {5 + 1.0 / 9, 5}, {5 + 1.0 / 9, 5 + 1.0 / 9}, {5, 5 + 1.0 / 9}};
  EXPECT_EQ(similarity_classes(scene_from_polygons({kUnitSquare, small})).classes.size(), 1u);
}

TEST(Similarity, CanonicalFormIgnoresRotationReflectionAndStart) {
  std::mt19937_64 rng(53);
  const Polygon p = to_ccw(convex_hull(oracle::random_convex(rng, 6)));
  const Polygon canon = canonical_form(p);
  Polygon q;
  const Similarity sim{0.3, 1.1, true, {4, -2}};
  for (Vec2 v : p) q.push_back(sim(v));
  std::rotate(q.begin(), q.begin() + 2, q.end());
  EXPECT_LT(shape_distance(canon, q), 1e-9);
  EXPECT_TRUE(std::isinf(shape_distance(canon, kTriangle)));
}

TEST(Similarity, PermutationInvariant) {
  std::vector<Polygon> polys;
  for (const Component& c : gasket(2).components) polys.push_back(c.polygon);
  polys.push_back({{3, 3}, {4, 3}, {4, 4}, {3, 4}});
  const auto a = similarity_classes(scene_from_polygons(polys));
  std::reverse(polys.begin(), polys.end());
  const auto b = similarity_classes(scene_from_polygons(polys));
  EXPECT_EQ(a.classes.size(), b.classes.size());
  const std::size_t n = polys.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(a.class_of[i] == a.class_of[j], b.class_of[n - 1 - i] == b.class_of[n - 1 - j]);
    }
  }
}

TEST(Measure, CarpetExamples) {
  EXPECT_NEAR(measure_summary(carpet(3)).area_estimate, std::pow(8.0 / 9.0, 3), 1e-12);
  EXPECT_NEAR(measure_summary(carpet(2)).perimeter_sum, 44.0 / 9.0, 1e-12);
  EXPECT_NEAR(measure_summary(carpet(1)).perimeter_sum, 4.0 / 3.0, 1e-12);
}

TEST(Measure, OccupiedAreaTracksEstimate) {
  const Scene s = carpet(2);
  const Grid g = rasterize(s, 243.0);
  const MeasureSummary m = measure_summary(s, &g);
  ASSERT_TRUE(m.occupied_area);
  EXPECT_NEAR(*m.occupied_area, m.area_estimate, 0.05);
}

}  // namespace
}  // namespace compss
