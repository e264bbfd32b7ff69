// Copyright 2026 The SphereHull Authors.
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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spherehull/support_tree.hpp"

namespace spherehull {
namespace {

using testing::CubeCorners;

TEST(Centroid, ArithmeticMean) {
  const PointCloud pts{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  EXPECT_EQ(Centroid(pts), Point3(0.5, 0.5, 0.5));
  const PointCloud one{{1, 1, 1}};
  EXPECT_EQ(Centroid(one), Point3(1, 1, 1));
  EXPECT_EQ(Centroid(CubeCorners()), Point3(0.5, 0.5, 0.5));
}

TEST(Centroid, EmptyThrows) {
  try {
    Centroid(PointCloud{});
    FAIL();
  } catch (const HullError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(Centroid, Subset) {
  const PointCloud pts{{0, 0, 0}, {9, 9, 9}, {2, 0, 0}};
  const std::vector<std::size_t> idx{0, 2};
  EXPECT_EQ(Centroid(pts, idx), Point3(1, 0, 0));
}

TEST(Centroid, InsideBoundingBox) {
  const PointCloud pts = RandomCloud(200, 3, Distribution::kCube);
  const Point3 c = Centroid(pts);
  EXPECT_GT(c.x, 0.0);
  EXPECT_LT(c.x, 1.0);
  EXPECT_GT(c.z, 0.0);
  EXPECT_LT(c.z, 1.0);
}

TEST(SupportPoint, CubeTieGoesToLowestIndex) {
  // Binary order: corner 1 is the first with x = 1.
  EXPECT_EQ(SupportPoint(CubeCorners(), Direction3::FromUnit({1, 0, 0})), 1u);
  EXPECT_EQ(SupportPoint(CubeCorners(), Direction3::FromUnit({0, 0, 1})), 4u);
}

TEST(SupportPoint, MaxDot) {
  const PointCloud pts{{0, 0, 0}, {3, 1, 0}, {1, 3, 0}};
  EXPECT_EQ(SupportPoint(pts, Direction3::FromUnit({1, 0, 0})), 1u);
  EXPECT_EQ(SupportPoint(pts, Direction3::FromUnit({0, 1, 0})), 2u);
}

TEST(SupportPoint, EmptyThrows) {
  EXPECT_THROW(SupportPoint(PointCloud{}, Direction3::FromUnit({1, 0, 0})), HullError);
}

TEST(SupportPoint, MatchesExhaustiveScan) {
  const PointCloud pts = RandomCloud(100, 11, Distribution::kBall);
  SplitMix64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Vec3 v{rng.NextDouble() - 0.5, rng.NextDouble() - 0.5, rng.NextDouble() - 0.5};
    const Direction3 d = Direction3::Normalize(v);
    EXPECT_EQ(SupportPoint(pts, d), oracle::Argmax(pts, d.vec()));
  }
}

TEST(SupportPoint, InvariantUnderPositiveScaling) {
  const PointCloud pts = RandomCloud(100, 12, Distribution::kBall);
  SplitMix64 rng(6);
  for (double s : {0.001, 0.5, 3.0, 1e6}) {
    PointCloud scaled;
    for (const Point3& p : pts) scaled.push_back(p * s);
    for (int k = 0; k < 50; ++k) {
      const Direction3 d =
          Direction3::Normalize({rng.NextDouble() - 0.5, rng.NextDouble() - 0.5, rng.NextDouble() - 0.5});
      EXPECT_EQ(SupportPoint(scaled, d), SupportPoint(pts, d));
    }
  }
}

TEST(SupportTree, MatchesExhaustiveScan) {
  for (Distribution dist : {Distribution::kBall, Distribution::kCube, Distribution::kGrid}) {
    const PointCloud pts = RandomCloud(1000, 21, dist);
    std::vector<SupportTree<3>::Coord> coords;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      coords.push_back({pts[i].x, pts[i].y, pts[i].z});
      idx.push_back(i);
    }
    const SupportTree<3> tree(coords, idx);
    SplitMix64 rng(7);
    for (int k = 0; k < 300; ++k) {
      const Vec3 d{rng.NextDouble() - 0.5, rng.NextDouble() - 0.5, rng.NextDouble() - 0.5};
      const std::size_t got = tree.Query({d.x, d.y, d.z});
      // Ties may resolve to any maximizer; the value must be maximal.
      EXPECT_EQ(Dot(d, pts[got]), Dot(d, pts[oracle::Argmax(pts, d)]));
    }
  }
}

TEST(SupportTree, EmptyReturnsSentinel) {
  const SupportTree<2> tree;
  EXPECT_EQ(tree.Query({1.0, 0.0}), std::numeric_limits<std::size_t>::max());
}

TEST(Direction3, RejectsNonUnit) {
  EXPECT_THROW(Direction3::FromUnit({1, 1, 0}), HullError);
  EXPECT_NO_THROW(Direction3::FromUnit({1 + 5e-10, 0, 0}));
  try {
    Direction3::Normalize({0, 0, 0});
    FAIL();
  } catch (const HullError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegeneratePoint);
  }
  const Direction3 d = Direction3::Normalize({3, 4, 0});
  EXPECT_NEAR(Length(d.vec()), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(d.x(), 0.6);
}

TEST(ProjectToSphere, AxisRay) {
  EXPECT_EQ(ProjectToSphere({3, 0, 0}, {0, 0, 0}), Point3(1, 0, 0));
  const Point3 p = ProjectToSphere({1, 1, 1}, {0, 0, 0});
  const double r = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(p.x, r, 1e-15);
  EXPECT_NEAR(p.y, r, 1e-15);
  EXPECT_NEAR(p.z, r, 1e-15);
}

TEST(ProjectToSphere, CenterThrows) {
  try {
    ProjectToSphere({1, 2, 3}, {1, 2, 3});
    FAIL();
  } catch (const HullError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegeneratePoint);
  }
}

TEST(ProjectToSphere, UnitDistanceAndIdempotent) {
  const PointCloud pts = RandomCloud(500, 13, Distribution::kCube);
  const Point3 c{0.3, -2.0, 7.0};
  for (const Point3& p : pts) {
    const Point3 s = ProjectToSphere(p, c);
    EXPECT_NEAR(Distance(s, c), 1.0, 1e-12);
    const Point3 t = ProjectToSphere(s, c);
    EXPECT_NEAR(Distance(s, t), 0.0, 1e-12);
  }
}

TEST(TriangleNormal, Winding) {
  const Direction3 up = TriangleNormal({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
  EXPECT_EQ(up.vec(), Vec3(0, 0, 1));
  const Direction3 down = TriangleNormal({0, 0, 0}, {0, 1, 0}, {1, 0, 0});
  EXPECT_EQ(down.vec(), Vec3(0, 0, -1));
}

TEST(TriangleNormal, CollinearThrows) {
  try {
    TriangleNormal({0, 0, 0}, {1, 0, 0}, {2, 0, 0});
    FAIL();
  } catch (const HullError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateTriangle);
  }
  EXPECT_THROW(TriangleNormal({0, 0, 0}, {0, 0, 0}, {1, 0, 0}), HullError);
}

TEST(TriangleNormal, AntisymmetricUnderSwap) {
  const PointCloud pts = RandomCloud(300, 14, Distribution::kBall);
  for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
    const Direction3 n = TriangleNormal(pts[i], pts[i + 1], pts[i + 2]);
    const Direction3 m = TriangleNormal(pts[i], pts[i + 2], pts[i + 1]);
    EXPECT_NEAR(Distance(n.vec(), -m.vec()), 0.0, 1e-12);
    EXPECT_NEAR(Length(n.vec()), 1.0, 1e-9);
  }
}

TEST(PlaneSide, Examples) {
  const Direction3 z = Direction3::FromUnit({0, 0, 1});
  EXPECT_EQ(PlaneSide(z, {0, 0, 0}, {5, 5, 1}), 1.0);
  EXPECT_EQ(PlaneSide(z, {0, 0, 0}, {5, 5, 0}), 0.0);
  EXPECT_EQ(PlaneSide(z, {0, 0, 2}, {0, 0, 1}), -1.0);
}

TEST(PlaneSide, AffineInPoint) {
  const PointCloud pts = RandomCloud(200, 15, Distribution::kBall);
  const Direction3 n = Direction3::Normalize({0.3, -0.4, 0.87});
  const Point3 v{0.1, 0.2, 0.3};
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const double mid = PlaneSide(n, v, (pts[i] + pts[i + 1]) * 0.5);
    const double avg = 0.5 * (PlaneSide(n, v, pts[i]) + PlaneSide(n, v, pts[i + 1]));
    EXPECT_NEAR(mid, avg, 1e-14);
  }
}

TEST(ToleranceConfig, Validation) {
  EXPECT_NO_THROW(ToleranceConfig{}.Validate());
  ToleranceConfig cfg;
  EXPECT_EQ(cfg.dedup_eps, 1e-8);
  EXPECT_EQ(cfg.plane_eps, 1e-9);
  EXPECT_EQ(cfg.degeneracy_eps, 1e-12);
  EXPECT_EQ(cfg.expansion_eps, cfg.plane_eps);
  cfg.plane_eps = 0.0;
  EXPECT_THROW(cfg.Validate(), HullError);
  cfg = {};
  cfg.expansion_eps = 1e-10;
  EXPECT_THROW(cfg.Validate(), HullError);
}

TEST(SignedTetVolume, Orientation) {
  EXPECT_DOUBLE_EQ(SignedTetVolume({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(SignedTetVolume({0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}), -1.0 / 6.0);
}

TEST(ErrorCode, Names) {
  EXPECT_STREQ(ToString(ErrorCode::kBrokenHorizon), "BrokenHorizon");
  const ParseError e(ErrorCode::kParseError, 7, "bad");
  EXPECT_EQ(e.line(), 7u);
  EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
}

}  // namespace
}  // namespace spherehull
