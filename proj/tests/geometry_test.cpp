/*
 * Copyright 2026 The udnsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "udnsim/geometry.hpp"

namespace udnsim {
namespace {

TEST(HexGrid, BsCountPerTier) {
  EXPECT_EQ(build_hex_grid(20.0, 0).n_bs(), 1u);
  EXPECT_EQ(build_hex_grid(20.0, 1).n_bs(), 7u);
  EXPECT_EQ(build_hex_grid(20.0, 2).n_bs(), 19u);
  EXPECT_EQ(build_hex_grid(20.0, 3).n_bs(), 37u);
  for (int t = 0; t <= 8; ++t)
    EXPECT_EQ(build_hex_grid(10.0, t).n_bs(), static_cast<std::size_t>(1 + 3 * t * (t + 1)));
}

TEST(HexGrid, ServingBsAtOrigin) {
  const auto l = build_hex_grid(40.0, 2);
  EXPECT_EQ(l.bs_positions[l.serving_index], (Point2{0.0, 0.0}));
}

TEST(HexGrid, FirstTierIsOneIsdAway) {
  const auto l = build_hex_grid(20.0, 1);
  for (std::size_t i = 1; i < l.n_bs(); ++i) EXPECT_NEAR(norm(l.bs_positions[i]), 20.0, 1e-9);
}

TEST(HexGrid, NearestNeighbourSpacingIsIsd) {
  for (double isd : {20.0, 37.5, 150.0}) {
    const auto l = build_hex_grid(isd, 3);
    for (std::size_t i = 0; i < l.n_bs(); ++i) {
      double nearest = 1e300;
      for (std::size_t j = 0; j < l.n_bs(); ++j)
        if (i != j) nearest = std::min(nearest, distance(l.bs_positions[i], l.bs_positions[j]));
      EXPECT_GE(nearest, isd - 1e-6);
      EXPECT_NEAR(nearest, isd, 1e-6);
    }
  }
}

// Brute force: grow the lattice by hops of length isd in six directions.
TEST(HexGrid, MatchesBreadthFirstLatticeWalk) {
  const double isd = 50.0;
  const int tiers = 3;
  auto key = [](const Point2& p) { return std::pair<long, long>{std::lround(p.x * 10), std::lround(p.y * 10)}; };
  std::set<std::pair<long, long>> reached{key({0, 0})};
  std::vector<Point2> frontier{{0, 0}};
  for (int step = 0; step < tiers; ++step) {
    std::vector<Point2> next;
    for (const auto& p : frontier) {
      for (int dir = 0; dir < 6; ++dir) {
        const double a = (30.0 + 60.0 * dir) * std::numbers::pi / 180.0;
        const Point2 q{p.x + isd * std::cos(a), p.y + isd * std::sin(a)};
        if (reached.insert(key(q)).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  const auto l = build_hex_grid(isd, tiers);
  std::set<std::pair<long, long>> built;
  for (const auto& p : l.bs_positions) built.insert(key(p));
  EXPECT_EQ(built, reached);

  double farthest = 0.0;
  for (const auto& p : l.bs_positions) farthest = std::max(farthest, norm(p));
  EXPECT_NEAR(farthest, 150.0, 1e-9);
}

TEST(HexGrid, RingsOrderedByTierThenAngle) {
  const auto l = build_hex_grid(30.0, 2);
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_NEAR(norm(l.bs_positions[i]), 30.0, 1e-9);
  for (std::size_t i = 7; i < 19; ++i) EXPECT_GT(norm(l.bs_positions[i]), 30.0 + 1e-6);
  EXPECT_NEAR(std::atan2(l.bs_positions[1].y, l.bs_positions[1].x), std::numbers::pi / 6.0, 1e-12);
}

TEST(HexGrid, RejectsBadArguments) {
  EXPECT_THROW(build_hex_grid(0.0, 1), ConfigError);
  EXPECT_THROW(build_hex_grid(-5.0, 1), ConfigError);
  EXPECT_THROW(build_hex_grid(20.0, -1), ConfigError);
  try {
    build_hex_grid(-1.0, 1);
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "isd_m");
  }
}

TEST(AntennaHeight, Examples) {
  EXPECT_NEAR(bs_antenna_height(0.0, 8.045, 1.5), 1.5, 1e-12);
  EXPECT_NEAR(bs_antenna_height(1e-9, 8.045, 1.5), 1.5, 1e-9);
  EXPECT_NEAR(bs_antenna_height(20.0, 8.045, 1.5), 3.13, 0.005);
  EXPECT_NEAR(bs_antenna_height(150.0, 8.045, 1.5), 13.74, 0.005);
}

TEST(AntennaHeight, StrictlyIncreasingInIsd) {
  double prev = bs_antenna_height(1.0, 8.045, 1.5);
  for (double isd = 2.0; isd <= 300.0; isd += 1.0) {
    const double h = bs_antenna_height(isd, 8.045, 1.5);
    EXPECT_GT(h, prev);
    prev = h;
  }
}

TEST(AntennaHeight, RejectsAlphaOutOfRange) {
  EXPECT_THROW(bs_antenna_height(20.0, 0.0, 1.5), ConfigError);
  EXPECT_THROW(bs_antenna_height(20.0, 90.0, 1.5), ConfigError);
}

TEST(UeDrop, EmptyDrop) {
  auto rng = make_stream(1, 0, StreamPurpose::ue_drop);
  EXPECT_TRUE(drop_ues(build_hex_grid(40.0, 1), 0, rng).positions.empty());
}

TEST(UeDrop, InsideServingCellAndNearestToServingBs) {
  const auto l = build_hex_grid(40.0, 1);
  const double radius = 40.0 / std::sqrt(3.0);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = make_stream(seed, 0, StreamPurpose::ue_drop);
    const auto drop = drop_ues(l, 10, rng);
    ASSERT_EQ(drop.positions.size(), 10u);
    for (const auto& p : drop.positions) {
      EXPECT_LE(norm(p), radius + 1e-9);
      EXPECT_GE(norm(p), kMinUeDistanceM);
      for (std::size_t b = 1; b < l.n_bs(); ++b) EXPECT_LE(norm(p), distance(p, l.bs_positions[b]) + 1e-9);
    }
  }
}

TEST(UeDrop, UniformAcrossSextants) {
  const auto l = build_hex_grid(40.0, 1);
  auto rng = make_stream(2024, 0, StreamPurpose::ue_drop);
  const auto drop = drop_ues(l, 1000, rng);
  std::array<int, 6> counts{};
  for (const auto& p : drop.positions) {
    double a = std::atan2(p.y, p.x);
    if (a < 0) a += 2.0 * std::numbers::pi;
    counts[std::min(5, static_cast<int>(a / (std::numbers::pi / 3.0)))]++;
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - 1000.0 / 6.0) * (c - 1000.0 / 6.0) / (1000.0 / 6.0);
  EXPECT_LT(chi2, 15.086);  // chi-square, 5 dof, 1% level
}

TEST(UeDrop, SameSeedSameDrop) {
  const auto l = build_hex_grid(70.0, 1);
  auto a = make_stream(9, 3, StreamPurpose::ue_drop);
  auto b = make_stream(9, 3, StreamPurpose::ue_drop);
  EXPECT_EQ(drop_ues(l, 25, a).positions, drop_ues(l, 25, b).positions);
}

TEST(UeDrop, RejectsCellSmallerThanExclusionRadius) {
  auto rng = make_stream(1, 0, StreamPurpose::ue_drop);
  EXPECT_THROW(drop_ues(build_hex_grid(2.0, 1), 1, rng), ConfigError);
}

}  // namespace
}  // namespace udnsim
